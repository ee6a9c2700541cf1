#include "dybx/io.hpp"

#include "dybx/builtin.hpp"
#include "dybx/errors.hpp"

#include <fstream>

namespace dybx {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int intFrom(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> intList(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (auto& e : j)
        out.push_back(intFrom(e, what));
    return out;
}

int groupElement(const Json& j, const FiniteGroup& g)
{
    if (j.is_string()) {
        int i = g.find(j.get<std::string>());
        if (i < 0)
            throw ParseError("unknown group element \"" + j.get<std::string>() + "\"");
        return i;
    }
    int i = intFrom(j, "group element");
    if (i < 0 || i >= g.size())
        throw ParseError("group element index " + std::to_string(i) + " out of range");
    return i;
}

int lieIndex(const Json& j, const LieAlgebraSpec& g)
{
    if (j.is_string()) {
        int i = g.find(j.get<std::string>());
        if (i < 0)
            throw ParseError("unknown basis label \"" + j.get<std::string>() + "\"");
        return i;
    }
    int i = intFrom(j, "basis index");
    if (i < 0 || i >= g.dim())
        throw ParseError("basis index " + std::to_string(i) + " out of range");
    return i;
}

int characterFromJson(const Json& j, const AbelianSubgroup& a)
{
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || i >= a.characterCount())
            throw ParseError("character index out of range");
        return i;
    }
    auto t = intList(j, "character tuple");
    if (t.size() != a.generators().size())
        throw ParseError("character tuple has the wrong length");
    return a.characterIndex(t);
}

QMatrix qmatrixFromJson(const Json& j, int n)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("matrix must have " + std::to_string(n) + " rows");
    QMatrix m(n, n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw ParseError("matrix row must have " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            m.set(i, k, rationalFromJson(j[i][k]));
    }
    return m;
}

Json qmatrixToJson(const QMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k)
            row.push_back(toJson(m.at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

Json readJsonFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void writeJsonFile(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

Json toJson(const Rational& q)
{
    return toString(q);
}

Rational rationalFromJson(const Json& j)
{
    if (j.is_string())
        return parseRational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string or an integer");
}

Json toJson(const Cyclotomic& c)
{
    Json coeffs = Json::array();
    for (auto& q : c.coeffs())
        coeffs.push_back(toJson(q));
    return Json{{"N", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomicFromJson(const Json& j)
{
    if (!j.is_object())
        return Cyclotomic(rationalFromJson(j));
    int n = intFrom(field(j, "N"), "N");
    if (n < 1)
        throw ParseError("cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    for (auto& e : field(j, "coeffs"))
        coeffs.push_back(rationalFromJson(e));
    const auto& fld = CyclotomicField::get(n);
    if (static_cast<int>(coeffs.size()) > fld.degree()) {
        // Coefficients of z^0..z^(N-1): reduce through the power table.
        std::vector<Rational> reduced(fld.degree());
        for (size_t k = 0; k < coeffs.size(); ++k)
            for (int i = 0; i < fld.degree(); ++i)
                reduced[i] += coeffs[k] * fld.power(static_cast<int>(k % n))[i];
        coeffs = reduced;
    }
    coeffs.resize(fld.degree());
    return Cyclotomic(n, coeffs);
}

Json toJson(const JetScalar& j)
{
    Json out = Json::array();
    for (auto& t : j.terms())
        out.push_back(Json::array({t.alpha, t.k, toJson(t.c)}));
    return out;
}

JetScalar jetFromJson(const Json& j, const JetShapePtr& shape)
{
    if (j.is_string() || j.is_number_integer())
        return JetScalar(shape, rationalFromJson(j));
    if (!j.is_array())
        throw ParseError("jet must be a list of [alpha, k, \"p/q\"] entries");
    JetScalar out(shape);
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("jet entry must be [alpha, k, \"p/q\"]");
        auto alpha = intList(e[0], "jet multi-index");
        if (static_cast<int>(alpha.size()) != shape->vars())
            throw ParseError("jet multi-index has " + std::to_string(alpha.size()) + " entries, expected " +
                             std::to_string(shape->vars()));
        int k = intFrom(e[1], "hbar order");
        if (k < 0 || k > shape->hbarCap() || shape->indexOf(alpha) < 0)
            continue; // truncated away
        out += JetScalar::monomial(shape, alpha, k, rationalFromJson(e[2]));
    }
    return out;
}

Json toJson(const FiniteGroup& g)
{
    return Json{{"size", g.size()}, {"cayley", g.cayley()}, {"labels", g.labels()}};
}

GroupPtr groupFromJson(const Json& j)
{
    if (j.is_string() || (j.is_object() && j.contains("builtin"))) {
        auto name = j.is_string() ? j.get<std::string>() : j.at("builtin").get<std::string>();
        auto g = builtinGroup(name);
        if (!g)
            throw ParseError("unknown builtin group \"" + name + "\"");
        return g;
    }
    auto table = field(j, "cayley");
    std::vector<std::vector<int>> cayley;
    for (auto& row : table)
        cayley.push_back(intList(row, "cayley row"));
    if (j.contains("size") && intFrom(j.at("size"), "size") != static_cast<int>(cayley.size()))
        throw ParseError("size does not match the cayley table");
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    try {
        return std::make_shared<const FiniteGroup>(cayley, labels);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid group: ") + e.what());
    }
}

Json toJson(const AbelianSubgroup& a)
{
    Json els = Json::array();
    for (int g : a.elements())
        els.push_back(a.group().label(g));
    return Json{{"elements", els}};
}

SubgroupPtr subgroupFromJson(const Json& j, GroupPtr g)
{
    std::vector<int> gens;
    const Json& list = j.contains("generators") ? j.at("generators") : field(j, "elements");
    if (!list.is_array())
        throw ParseError("subgroup elements must be an array");
    for (auto& e : list)
        gens.push_back(groupElement(e, *g));
    auto a = subgroupGeneratedBy(g, gens);
    if (j.contains("elements") && !j.contains("generators") && a->size() != static_cast<int>(gens.size()))
        throw ParseError("listed elements do not form a subgroup");
    return a;
}

Json toJson(const TensorElement& t)
{
    Json terms = Json::array();
    for (auto& [key, c] : t.terms()) {
        Json g = Json::array();
        for (int e : t.decode(key))
            g.push_back(t.group()->label(e));
        terms.push_back(Json{{"g", g}, {"c", toJson(c)}});
    }
    return Json{{"order", t.order()}, {"terms", terms}};
}

TensorElement tensorFromJson(const Json& j, GroupPtr g)
{
    int order = intFrom(field(j, "order"), "order");
    if (order < 1)
        throw ParseError("tensor order must be positive");
    TensorElement t(g, order);
    for (auto& term : field(j, "terms")) {
        std::vector<int> elems;
        for (auto& e : field(term, "g"))
            elems.push_back(groupElement(e, *g));
        if (static_cast<int>(elems.size()) != order)
            throw ParseError("term has the wrong number of legs");
        t.add(elems, cyclotomicFromJson(field(term, "c")));
    }
    return t;
}

Json toJson(const DynamicalMap& m)
{
    Json values = Json::array();
    for (int l = 0; l < m.size(); ++l)
        values.push_back(Json{{"lambda", m.domain()->characterTuple(l)}, {"element", toJson(m[l])}});
    return Json{{"subgroup", toJson(*m.domain())}, {"order", m.order()}, {"values", values}};
}

DynamicalMap dynamicalMapFromJson(const Json& j, SubgroupPtr a)
{
    if (!a && j.contains("subgroup"))
        throw ParseError("a dynamical map needs its group; pass --group");
    int order = intFrom(field(j, "order"), "order");
    if (j.contains("constant")) {
        auto t = tensorFromJson(j.at("constant"), a->parent());
        if (t.order() != order)
            throw ParseError("constant order differs from the map order");
        return DynamicalMap::constant(a, t);
    }
    DynamicalMap m(a, order);
    for (int l = 0; l < a->characterCount(); ++l)
        m.set(l, TensorElement(a->parent(), order));
    for (auto& v : field(j, "values")) {
        int l = characterFromJson(field(v, "lambda"), *a);
        auto t = tensorFromJson(field(v, "element"), a->parent());
        if (t.order() != order)
            throw ParseError("value order differs from the map order");
        m.set(l, t);
    }
    return m;
}

Json toJson(const TwoVarGroupFunction& g, const AbelianSubgroup& a)
{
    Json table = Json::array();
    for (int l = 0; l < static_cast<int>(g.size()); ++l)
        for (int m = 0; m < static_cast<int>(g[l].size()); ++m)
            table.push_back(Json{{"lambda", a.characterTuple(l)},
                                 {"mu", a.characterTuple(m)},
                                 {"g", a.group().label(g[l][m])}});
    return Json{{"table", table}};
}

TwoVarGroupFunction twoVarFromJson(const Json& j, const AbelianSubgroup& a)
{
    int n = a.characterCount();
    TwoVarGroupFunction g(n, std::vector<int>(n, -1));
    for (auto& e : field(j, "table"))
        g[characterFromJson(field(e, "lambda"), a)][characterFromJson(field(e, "mu"), a)] =
            groupElement(field(e, "g"), a.group());
    for (auto& row : g)
        for (int v : row)
            if (v < 0)
                throw ParseError("g table does not cover every (lambda, mu) pair");
    return g;
}

Json toJson(const LieAlgebraSpec& g)
{
    Json brackets = Json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k)
            for (int m = 0; m < g.dim(); ++m)
                if (!isZero(g.structure(i, k, m)))
                    brackets.push_back(Json{{"i", i}, {"j", k}, {"k", m}, {"c", toJson(g.structure(i, k, m))}});
    return Json{{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", brackets}, {"abelian", g.abelian()}};
}

LiePtr lieFromJson(const Json& j)
{
    if (j.is_string() || (j.is_object() && j.contains("builtin"))) {
        auto name = j.is_string() ? j.get<std::string>() : j.at("builtin").get<std::string>();
        if (name == "rank-one")
            return rankOneAlgebra();
        if (name.size() > 2 && name.rfind("gl", 0) == 0) {
            int n = std::stoi(name.substr(2));
            if (n >= 1 && n <= 6)
                return std::make_shared<const LieAlgebraSpec>(glSemidirect(n));
        }
        throw ParseError("unknown builtin Lie algebra \"" + name + "\"");
    }
    int dim = intFrom(field(j, "dim"), "dim");
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (int i = 0; i < dim; ++i)
            labels.push_back("e" + std::to_string(i));
    if (static_cast<int>(labels.size()) != dim)
        throw ParseError("labels do not match dim");
    auto abelianJson = field(j, "abelian");
    std::vector<int> abelian;
    LieAlgebraSpec probe(labels, {});
    for (auto& e : abelianJson)
        abelian.push_back(lieIndex(e, probe));
    auto g = std::make_shared<LieAlgebraSpec>(labels, abelian);
    if (j.contains("brackets"))
        for (auto& b : j.at("brackets"))
            g->setBracket(lieIndex(field(b, "i"), *g), lieIndex(field(b, "j"), *g), lieIndex(field(b, "k"), *g),
                          rationalFromJson(field(b, "c")));
    return g;
}

Json toJson(const MatrixRep& r, const LieAlgebraSpec& g)
{
    Json mats = Json::object();
    for (int b = 0; b < r.basisSize(); ++b)
        mats[g.label(b)] = qmatrixToJson(r.of(b));
    return Json{{"dim", r.dim()}, {"matrices", mats}};
}

std::shared_ptr<const MatrixRep> repFromJson(const Json& j, const LieAlgebraSpec& g)
{
    if (j.is_string() || (j.is_object() && j.contains("builtin"))) {
        auto name = j.is_string() ? j.get<std::string>() : j.at("builtin").get<std::string>();
        if (name != "defining")
            throw ParseError("unknown builtin representation \"" + name + "\"");
        if (g.labels() == rankOneAlgebra()->labels() && g.dim() == 2)
            return rankOneRep();
        for (int n = 1; n <= 6; ++n)
            if (n * n + n == g.dim())
                return std::make_shared<const MatrixRep>(glSemidirectDefining(n));
        throw ParseError("no defining representation for this Lie algebra");
    }
    int dim = intFrom(field(j, "dim"), "dim");
    auto& mats = field(j, "matrices");
    std::vector<QMatrix> m(g.dim(), QMatrix(dim, dim, Rational(0)));
    if (mats.is_array()) {
        if (static_cast<int>(mats.size()) != g.dim())
            throw ParseError("one matrix per basis element expected");
        for (int b = 0; b < g.dim(); ++b)
            m[b] = qmatrixFromJson(mats[b], dim);
    } else {
        for (auto& [label, mat] : mats.items())
            m[lieIndex(Json(label), g)] = qmatrixFromJson(mat, dim);
    }
    return std::make_shared<const MatrixRep>(dim, m);
}

Json toJson(const ClassicalR& r)
{
    Json comps = Json::array();
    for (int a = 0; a < r.lie->dim(); ++a)
        for (int b = 0; b < r.lie->dim(); ++b)
            if (!r.at(a, b).isZero())
                comps.push_back(Json{{"a", r.lie->label(a)}, {"b", r.lie->label(b)}, {"jet", toJson(r.at(a, b))}});
    return Json{{"lie", toJson(*r.lie)}, {"certified", r.certified}, {"components", comps}};
}

ClassicalR classicalRFromJson(const Json& j, const JetShapePtr& shape, LiePtr lie)
{
    if (!lie)
        lie = lieFromJson(field(j, "lie"));
    if (shape->vars() != lie->abelianDim())
        throw ParseError("jet variables must match dim a");
    int certified = j.contains("certified") ? intFrom(j.at("certified"), "certified") : shape->degCap();
    ClassicalR r(lie, shape, std::min(certified, shape->degCap()));
    for (auto& c : field(j, "components"))
        r.at(lieIndex(field(c, "a"), *lie), lieIndex(field(c, "b"), *lie)) += jetFromJson(field(c, "jet"), shape);
    return r;
}

Json toJson(const GammaMatrixJet& g)
{
    Json rows = Json::array();
    for (int i = 0; i < g.gamma.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < g.gamma.cols(); ++k)
            row.push_back(toJson(g.gamma.at(i, k)));
        rows.push_back(row);
    }
    return Json{{"lie", toJson(*g.lie)}, {"rep", toJson(*g.rep, *g.lie)}, {"certified", g.certified}, {"entries", rows}};
}

GammaMatrixJet gammaFromJson(const Json& j, const JetShapePtr& shape, LiePtr lie,
                             std::shared_ptr<const MatrixRep> rep)
{
    if (!lie)
        lie = lieFromJson(field(j, "lie"));
    if (!rep)
        rep = repFromJson(field(j, "rep"), *lie);
    if (shape->vars() != lie->abelianDim())
        throw ParseError("jet variables must match dim a");
    int n = rep->dim();
    auto& rows = field(j, "entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("gamma must have " + std::to_string(n) + " rows");
    GammaMatrixJet g{lie, rep, JMatrix(n, n, JetScalar(shape)), shape->degCap()};
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw ParseError("gamma row must have " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            g.gamma.set(i, k, jetFromJson(rows[i][k], shape));
    }
    if (j.contains("certified"))
        g.certified = std::min(intFrom(j.at("certified"), "certified"), shape->degCap());
    return g;
}

Json toJson(const PBWElement& u)
{
    Json terms = Json::array();
    for (auto& [m, c] : u.terms())
        terms.push_back(Json{{"monomial", m}, {"jet", toJson(c)}});
    return Json{{"order", u.order()}, {"terms", terms}};
}

PBWElement pbwFromJson(const Json& j, const JetShapePtr& shape)
{
    int order = intFrom(field(j, "order"), "order");
    PBWElement u(shape, order);
    for (auto& t : field(j, "terms")) {
        auto m = intList(field(t, "monomial"), "monomial");
        if (static_cast<int>(m.size()) != 2 * order)
            throw ParseError("monomial must list (a, b) per leg");
        u.add(m, jetFromJson(field(t, "jet"), shape));
    }
    return u;
}

Json toJson(const Report& r)
{
    Json checks = Json::array();
    for (auto& c : r.checks) {
        Json findings = Json::array();
        for (auto& f : c.findings)
            findings.push_back(Json{{"where", f.where}, {"residual", f.residual}});
        Json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty())
            cj["detail"] = c.detail;
        cj["findings"] = findings;
        checks.push_back(cj);
    }
    return Json{{"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
}

} // namespace dybx
