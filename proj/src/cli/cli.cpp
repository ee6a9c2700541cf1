#include "dybx/cli.hpp"

#include "dybx/builtin.hpp"
#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"
#include "dybx/io.hpp"
#include "dybx/parallel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace dybx {

namespace {

struct Options {
    std::string report;
    int hbarOrder = 3;
    int deg = 4;
    std::string convention;
    int parallel = 1;

    std::string group, subgroup, abar, twist, x, jbar, r, gfile, f, object;
    std::string lie, rep, gamma, fJets, fCoeffs;
    int fKnown = -1;
    int n = 0;
};

/// Collects what one command produces; rendered into the JSON report.
struct Run {
    std::vector<Report> reports;
    Json data = Json::object();

    void add(Report r, const std::string& title = {})
    {
        if (!title.empty())
            r.title = title;
        reports.push_back(std::move(r));
    }
    bool pass() const
    {
        for (auto& r : reports)
            if (!r.pass())
                return false;
        return true;
    }
};

GroupPtr loadGroup(const Options& o)
{
    if (o.group.empty())
        throw ParseError("--group is required");
    if (auto g = builtinGroup(o.group))
        return g;
    return groupFromJson(readJsonFile(o.group));
}

SubgroupPtr loadSubgroup(const std::string& path, GroupPtr g, const char* flag)
{
    if (path.empty())
        throw ParseError(std::string(flag) + " is required");
    if (path == "trivial")
        return subgroupGeneratedBy(g, {});
    return subgroupFromJson(readJsonFile(path), g);
}

DynamicalMap loadMap(const std::string& path, SubgroupPtr a, const char* flag, int order)
{
    if (path.empty())
        throw ParseError(std::string(flag) + " is required");
    if (path == "trivial")
        return DynamicalMap::constant(a, TensorElement::unit(a->parent(), order));
    auto m = dynamicalMapFromJson(readJsonFile(path), a);
    if (m.order() != order)
        throw ParseError(std::string(flag) + " must have tensor order " + std::to_string(order));
    return m;
}

LiePtr loadLie(const Options& o, const Json* embedded)
{
    if (!o.lie.empty()) {
        if (o.lie.find(".json") == std::string::npos)
            return lieFromJson(Json(o.lie));
        return lieFromJson(readJsonFile(o.lie));
    }
    if (embedded && embedded->contains("lie"))
        return lieFromJson(embedded->at("lie"));
    throw ParseError("--lie is required");
}

std::shared_ptr<const MatrixRep> loadRep(const Options& o, const LieAlgebraSpec& g, const Json* embedded)
{
    if (!o.rep.empty()) {
        if (o.rep.find(".json") == std::string::npos)
            return repFromJson(Json(o.rep), g);
        return repFromJson(readJsonFile(o.rep), g);
    }
    if (embedded && embedded->contains("rep"))
        return repFromJson(embedded->at("rep"), g);
    throw ParseError("--rep is required");
}

std::vector<int> parseIntList(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad integer \"" + item + "\"");
        }
    return out;
}

FunctionJet parseFunction(const Options& o)
{
    if (o.fCoeffs.empty())
        throw ParseError("--f-coeffs is required");
    FunctionJet f;
    std::stringstream ss(o.fCoeffs);
    std::string item;
    while (std::getline(ss, item, ','))
        f.coeffs.push_back(parseRational(item));
    f.knownDegree = o.fKnown;
    return f;
}

// group ---------------------------------------------------------------------

void groupCheckTwist(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    run.add(checkTwist(loadMap(o.twist, A, "--twist", 2)));
}

void groupGauge(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto j = gauge(loadMap(o.twist, A, "--twist", 2), loadMap(o.x, A, "--x", 1));
    run.add(checkTwist(j), "gauge-transformed twist");
    run.data["twist"] = toJson(j);
}

void groupVirf(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto Abar = loadSubgroup(o.abar.empty() ? "trivial" : o.abar, G, "--abar");
    auto x = loadMap(o.x, A, "--x", 1);
    run.add(checkTransformation(x, *Abar), "x as a transformation for Abar");
    auto res = vertexIRF(loadMap(o.jbar.empty() ? "trivial" : o.jbar, Abar, "--jbar", 2), x);
    Report zw;
    zw.title = "vertex-IRF";
    zw.add("zero-weight", res.zeroWeight, res.detail);
    if (!res.zeroWeight)
        zw.checks.back().fail("J^x", res.detail);
    run.add(zw);
    run.add(checkTwist(res.twist), "resulting twist");
    run.data["twist"] = toJson(res.twist);
}

void groupIrfVertex(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto Abar = loadSubgroup(o.abar.empty() ? "trivial" : o.abar, G, "--abar");
    auto res = irfVertex(loadMap(o.twist, A, "--twist", 2), loadMap(o.x, A, "--x", 1), Abar);
    Report fib;
    fib.title = "IRF-vertex";
    auto& c = fib.add("constant-on-fibres");
    if (!res.zeroWeight) {
        c.fail("fibre", res.detail);
        run.add(fib);
        return;
    }
    run.add(fib);
    run.add(checkTwist(res.twist), "resulting twist");
    run.data["twist"] = toJson(res.twist);
}

void groupRmatrix(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto R = dynamicalR(loadMap(o.twist, A, "--twist", 2));
    run.add(checkQDYBE(R));
    run.data["r"] = toJson(R);
}

void groupQdybe(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    run.add(checkQDYBE(loadMap(o.r, A, "--r", 2)));
}

Json bijectionJson(const Bijection& f, const AbelianSubgroup& a)
{
    Json out = Json::array();
    for (int l = 0; l < static_cast<int>(f.size()); ++l)
        out.push_back(Json{{"lambda", a.characterTuple(l)}, {"f", a.characterTuple(f[l])}});
    return out;
}

void groupClassify(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto fs = realizableFs(*A);
    Report rep;
    rep.title = "classification";
    Json list = Json::array();
    for (auto& f : fs) {
        Json entry{{"f", bijectionJson(f, *A)}};
        auto w = findGroupWitness(*A, f);
        if (w) {
            auto q = quasiGrouplike(A, *w, f);
            entry["witness"] = toJson(*w, *A);
            auto& agree = rep.add("formulas-agree");
            if (!q.agree)
                agree.fail("f", entry["f"].dump());
            auto t = checkTwist(q.twist);
            rep.append(t, "twist: ");
            Bijection normalized(f.size());
            for (std::size_t l = 0; l < f.size(); ++l)
                normalized[l] = A->subtractCharacters(f[l], f[0]);
            auto& rec = rep.add("recoverF");
            if (recoverF(q.x) != normalized)
                rec.fail("f", entry["f"].dump());
        } else {
            entry["witness"] = nullptr;
            entry["note"] = "no group-valued witness found";
        }
        list.push_back(entry);
    }
    run.data["count"] = fs.size();
    run.data["realizable"] = list;
    run.add(rep);
}

void groupQuasigrouplike(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    if (o.gfile.empty() || o.f.empty())
        throw ParseError("--gfile and --f are required");
    auto g = twoVarFromJson(readJsonFile(o.gfile), *A);
    Bijection f = parseIntList(o.f);
    if (!isBijection(f, A->characterCount()))
        throw ParseError("--f is not a bijection of the character indices");
    if (auto bad = checkAdCondition(*A, g, f)) {
        Report rep;
        rep.title = "Ad condition";
        rep.add("ad-condition").fail("(" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")",
                                     "(lambda - mu) o Ad_g != f(lambda) - f(mu)");
        run.add(rep);
        return;
    }
    auto q = quasiGrouplike(A, g, f);
    Report agree;
    agree.title = "quasi-grouplike";
    agree.add("formulas-agree", q.agree);
    if (!q.agree)
        agree.checks.back().fail("J", "normal-ordered formula differs from twistFromX");
    run.add(agree);
    run.add(checkRealizes(q.x, f));
    run.add(checkTwist(q.twist));
    run.data["x"] = toJson(q.x);
    run.data["twist"] = toJson(q.twist);
}

Json matrixJson(const CMatrix& m)
{
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (auto& [k, v] : m.row(i))
            entries.push_back(Json{{"i", i}, {"j", k}, {"c", toJson(v)}});
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

void groupFunctor(const Options& o, Run& run)
{
    auto G = loadGroup(o);
    auto A = loadSubgroup(o.subgroup, G, "--subgroup");
    auto x = loadMap(o.x, A, "--x", 1);
    TensorElement jbar = TensorElement::unit(G, 2);
    if (!o.jbar.empty() && o.jbar != "trivial")
        jbar = tensorFromJson(readJsonFile(o.jbar), G);
    if (!o.object.empty() && o.object != "trivial")
        throw ParseError("--object supports only \"trivial\"");
    auto trivialSub = subgroupGeneratedBy(G, {});
    auto virf = vertexIRF(DynamicalMap::constant(trivialSub, jbar), x);
    Report pre;
    pre.title = "precondition";
    pre.add("vertex-IRF", virf.zeroWeight);
    if (!virf.zeroWeight) {
        pre.checks.back().fail("x", virf.detail);
        run.add(pre);
        return;
    }
    run.add(pre);
    auto obj = trivialObject(A);
    std::vector<GModule> family{GModule::regular(G)};
    run.add(checkObject(obj, virf.twist, family), "object of Rep(J)");
    auto img = irfVertexFunctor(obj, x, jbar);
    run.add(checkObject(img, DynamicalMap::constant(img.domain, jbar), family), "image in Rep(Jbar)");
    auto L = img.l(family[0]);
    int lambdas = A->characterCount();
    auto kernel = differenceKernel(L[0], family[0].dim() * (img.v.dim / lambdas), lambdas);
    Json blocks = Json::array();
    for (int l = 0; l < lambdas; ++l)
        for (int m = 0; m < lambdas; ++m)
            if (kernel[l][m].rows() > 0 && !kernel[l][m].isZeroMatrix())
                blocks.push_back(Json{{"lambda", A->characterTuple(l)},
                                      {"lambda'", A->characterTuple(m)},
                                      {"kernel", matrixJson(kernel[l][m])}});
    run.data["module"] = family[0].name();
    run.data["kernels"] = blocks;
}

// classical -----------------------------------------------------------------

JetShapePtr classicalShape(const Options& o, const LieAlgebraSpec& g)
{
    return JetShape::get(g.abelianDim(), o.deg, 0);
}

void addClassicalChecks(const ClassicalR& r, Run& run)
{
    run.add(checkCDYBE(r));
    auto deg = completeDegeneracy(r);
    deg.report.title = "complete degeneracy";
    run.add(deg.report);
}

void classicalCheck(const Options& o, Run& run)
{
    if (o.r.empty())
        throw ParseError("--r is required");
    auto doc = readJsonFile(o.r);
    auto lie = loadLie(o, &doc);
    auto r = classicalRFromJson(doc, classicalShape(o, *lie), lie);
    addClassicalChecks(r, run);
}

void classicalFromGamma(const Options& o, Run& run)
{
    if (o.gamma.empty())
        throw ParseError("--gamma is required");
    auto doc = readJsonFile(o.gamma);
    auto lie = loadLie(o, &doc);
    auto rep = loadRep(o, *lie, &doc);
    auto g = gammaFromJson(doc, classicalShape(o, *lie), lie, rep);
    auto res = rFromGamma(g);
    run.add(res.report, "r from gamma");
    addClassicalChecks(res.r, run);
    run.data["r"] = toJson(res.r);
}

void classicalReconstruct(const Options& o, Run& run)
{
    if (o.r.empty())
        throw ParseError("--r is required");
    auto doc = readJsonFile(o.r);
    auto lie = loadLie(o, &doc);
    auto rep = loadRep(o, *lie, nullptr);
    auto r = classicalRFromJson(doc, classicalShape(o, *lie), lie);
    auto deg = completeDegeneracy(r);
    deg.report.title = "complete degeneracy";
    run.add(deg.report);
    if (!deg.family)
        return;
    run.add(checkFlatness(*deg.family), "flatness");
    auto rec = reconstructGamma(*deg.family, *rep);
    run.add(rec.report, "reconstruction");
    Json gamma = Json::array();
    for (int i = 0; i < rec.gammaHat.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < rec.gammaHat.cols(); ++k)
            row.push_back(toJson(rec.gammaHat.at(i, k)));
        gamma.push_back(row);
    }
    Json residue = Json::array();
    for (auto& row : rec.residue) {
        Json jr = Json::array();
        for (auto& c : row)
            jr.push_back(toJson(c));
        residue.push_back(jr);
    }
    run.data["gammaHat"] = gamma;
    run.data["residue"] = residue;
}

void classicalRnf(const Options& o, Run& run)
{
    if (o.n < 1 || o.fJets.empty())
        throw ParseError("--n and --f-jets are required");
    auto shape = JetShape::get(o.n, o.deg, 0);
    auto doc = readJsonFile(o.fJets);
    const Json& list = doc.is_object() && doc.contains("f") ? doc.at("f") : doc;
    if (!list.is_array() || static_cast<int>(list.size()) != o.n)
        throw ParseError("--f-jets must hold " + std::to_string(o.n) + " jets");
    std::vector<JetScalar> f;
    for (auto& j : list)
        f.push_back(jetFromJson(j, shape));
    auto rn = rNF(o.n, f);
    run.add(rn.result.report, "r from gamma");
    addClassicalChecks(rn.result.r, run);
    run.data["r"] = toJson(rn.result.r);
}

// formal --------------------------------------------------------------------

void formalGl1(const Options& o, Run& run)
{
    auto f = parseFunction(o);
    auto shape = JetShape::get(1, o.deg, o.hbarOrder);
    auto j = gl1Twist(f, o.hbarOrder, o.deg);
    run.add(checkFormalTwist(j));
    auto lim = quasiClassicalLimit(j);
    run.add(lim.report);
    // r = (f''/f') X ^ Y, built directly from the derivatives of f.
    ClassicalR expected(rankOneAlgebra(), shape, lim.r.certified);
    expected.addWedge(0, 1, derivativeJet(f, shape, 2) * derivativeJet(f, shape, 1).inverse());
    Report cmp;
    cmp.title = "classical limit";
    auto& c = cmp.add("equals-f2-over-f1-XY");
    if (!lim.r.equals(expected))
        c.fail("r", lim.r.str());
    run.add(cmp);
    run.data["twist"] = toJson(j);
    run.data["r"] = toJson(lim.r);
}

void formalQuantize(const Options& o, Run& run)
{
    if (o.gamma.empty())
        throw ParseError("--gamma is required");
    auto doc = readJsonFile(o.gamma);
    auto lie = loadLie(o, &doc);
    auto rep = loadRep(o, *lie, &doc);
    auto g = gammaFromJson(doc, JetShape::get(lie->abelianDim(), o.deg, o.hbarOrder), lie, rep);
    auto q = quantizeRep(g);
    run.add(q.report);
    Json rows = Json::array();
    for (int i = 0; i < q.R.rows(); ++i)
        for (auto& [k, v] : q.R.row(i))
            rows.push_back(Json{{"i", i}, {"j", k}, {"jet", toJson(v)}});
    run.data["R"] = rows;
}

void formalLimit(const Options& o, Run& run)
{
    if (o.twist.empty())
        throw ParseError("--twist is required");
    auto j = pbwFromJson(readJsonFile(o.twist), JetShape::get(1, o.deg, o.hbarOrder));
    auto lim = quasiClassicalLimit(j);
    run.add(lim.report);
    run.data["r"] = toJson(lim.r);
}

// corpus --------------------------------------------------------------------

void corpusRun(const Options&, Run& run)
{
    Json timing = Json::object();
    for (auto& s : runCorpus()) {
        s.report.title = s.name;
        run.add(s.report);
        timing[s.name] = s.seconds;
    }
    run.data["suite-seconds"] = timing;
}

/// Comma-separated key=value list: wedge=full|half, qdybe=mirrored|felder,
/// x-order=y-left|y-right.
void applyConvention(const std::string& text)
{
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "wedge=full")
            conventions().wedgeFull = true;
        else if (item == "wedge=half")
            conventions().wedgeFull = false;
        else if (item == "qdybe=mirrored")
            conventions().qdybeFelder = false;
        else if (item == "qdybe=felder")
            conventions().qdybeFelder = true;
        else if (item == "x-order=y-left")
            conventions().xYPowersLeft = true;
        else if (item == "x-order=y-right")
            conventions().xYPowersLeft = false;
        else
            throw ParseError("unknown convention \"" + item + "\" (expected wedge=full|half, qdybe=mirrored|felder, "
                             "x-order=y-left|y-right)");
    }
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    // --convention applies to this run only, also when runCli is called repeatedly in-process.
    struct RestoreConventions {
        Conventions saved = conventions();
        ~RestoreConventions() { conventions() = saved; }
    } restore;
    Options o;
    CLI::App app{"Dynamical twists, vertex-IRF transformations and their quantization", "dybx"};
    app.require_subcommand(1);
    // Subcommands inherit this, so global flags may follow the command words.
    app.fallthrough();
    app.add_option("--report", o.report, "write the JSON report to this path");
    app.add_option("--hbar-order", o.hbarOrder, "truncation order K in hbar")->check(CLI::Range(0, 12));
    app.add_option("--deg", o.deg, "jet degree D in the dynamical variables")->check(CLI::Range(1, 16));
    app.add_option("--convention", o.convention, "wedge=full|half[,qdybe=mirrored|felder][,x-order=y-left|y-right]");
    app.add_option("--parallel", o.parallel, "worker threads")->check(CLI::Range(1, 256));

    std::function<void(const Options&, Run&)> action;
    std::string commandName;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<void(const Options&, Run&)> fn) {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([&, fn, sub, parent] {
            action = fn;
            commandName = parent->get_name() + " " + sub->get_name();
        });
        return sub;
    };

    auto* group = app.add_subcommand("group", "finite-group twists");
    group->require_subcommand(1);
    auto groupFlags = [&](CLI::App* s) {
        s->add_option("--group", o.group, "group file or builtin name (S3, D4, Z5, ...)");
        s->add_option("--subgroup", o.subgroup, "abelian subgroup file");
    };
    auto* s = leaf(group, "check-twist", "verify a dynamical twist", groupCheckTwist);
    groupFlags(s);
    s->add_option("--twist", o.twist, "dynamical map of order 2, or 'trivial'");
    s = leaf(group, "gauge", "apply a gauge transformation", groupGauge);
    groupFlags(s);
    s->add_option("--twist", o.twist);
    s->add_option("--x", o.x);
    s = leaf(group, "virf", "vertex-IRF transformation", groupVirf);
    groupFlags(s);
    s->add_option("--abar", o.abar, "subgroup of A (default trivial)");
    s->add_option("--jbar", o.jbar, "twist over Abar (default 1 (x) 1)");
    s->add_option("--x", o.x);
    s = leaf(group, "irf-vertex", "IRF-vertex transformation", groupIrfVertex);
    groupFlags(s);
    s->add_option("--abar", o.abar);
    s->add_option("--twist", o.twist);
    s->add_option("--x", o.x);
    s = leaf(group, "rmatrix", "dynamical R-matrix of a twist", groupRmatrix);
    groupFlags(s);
    s->add_option("--twist", o.twist);
    s = leaf(group, "qdybe", "check the quantum dynamical Yang-Baxter equation", groupQdybe);
    groupFlags(s);
    s->add_option("--r", o.r);
    s = leaf(group, "classify", "realizable functions f", groupClassify);
    groupFlags(s);
    s = leaf(group, "quasigrouplike", "twist from a group-valued g", groupQuasigrouplike);
    groupFlags(s);
    s->add_option("--gfile", o.gfile);
    s->add_option("--f", o.f, "comma separated character indices");
    s = leaf(group, "functor", "IRF-vertex functor on the trivial object", groupFunctor);
    groupFlags(s);
    s->add_option("--x", o.x);
    s->add_option("--jbar", o.jbar, "constant twist (tensor file, default 1 (x) 1)");
    s->add_option("--object", o.object, "'trivial'");

    auto* classical = app.add_subcommand("classical", "classical dynamical r-matrices");
    classical->require_subcommand(1);
    s = leaf(classical, "check", "CDYBE and complete degeneracy", classicalCheck);
    s->add_option("--r", o.r);
    s->add_option("--lie", o.lie);
    s = leaf(classical, "from-gamma", "r from a curve gamma", classicalFromGamma);
    s->add_option("--gamma", o.gamma);
    s->add_option("--lie", o.lie);
    s->add_option("--rep", o.rep);
    s = leaf(classical, "reconstruct", "gamma and residue from r", classicalReconstruct);
    s->add_option("--r", o.r);
    s->add_option("--lie", o.lie);
    s->add_option("--rep", o.rep);
    s = leaf(classical, "rnf", "r for gl(n) x C^n from f", classicalRnf);
    s->add_option("--n", o.n);
    s->add_option("--f-jets", o.fJets);

    auto* formal = app.add_subcommand("formal", "formal quantization");
    formal->require_subcommand(1);
    s = leaf(formal, "gl1", "universal rank-one twist", formalGl1);
    s->add_option("--f-coeffs", o.fCoeffs, "Taylor coefficients of f at 0");
    s->add_option("--f-known", o.fKnown, "coefficients above this degree are unknown (default: exact)");
    s = leaf(formal, "quantize", "representation-level quantization", formalQuantize);
    s->add_option("--gamma", o.gamma);
    s->add_option("--lie", o.lie);
    s->add_option("--rep", o.rep);
    s = leaf(formal, "limit", "quasi-classical limit of a rank-one twist", formalLimit);
    s->add_option("--twist", o.twist);

    auto* corpus = app.add_subcommand("corpus", "bundled regression instances");
    corpus->require_subcommand(1);
    leaf(corpus, "run", "run every bundled suite", corpusRun);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dybx: " << e.what() << "\n";
        return 2;
    }

    Run run;
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    std::string error;
    try {
        applyConvention(o.convention);
        setParallelism(o.parallel);
        action(o, run);
        code = run.pass() ? 0 : 1;
    } catch (const ParseError& e) {
        err << "dybx: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        error = e.what();
        code = 1;
    } catch (const InvariantViolation& e) {
        err << "dybx: internal invariant violated: " << e.what() << "\n";
        return 3;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string echo = "dybx";
    for (auto& a : args)
        echo += " " + a;
    Json doc{{"command", echo}, {"subcommand", commandName}, {"conventions", conventions().describe()},
             {"verdict", code == 0 ? "pass" : "fail"}};
    if (!error.empty())
        doc["precondition-failure"] = error;
    Json reports = Json::array();
    for (auto& r : run.reports)
        reports.push_back(toJson(r));
    doc["reports"] = reports;
    doc["data"] = run.data;
    doc["timing"] = Json{{"seconds", secs}};
    try {
        if (o.report.empty())
            out << doc.dump(2) << "\n";
        else {
            writeJsonFile(o.report, doc);
            out << commandName << ": " << (code == 0 ? "pass" : "fail") << "\n";
        }
    } catch (const ParseError& e) {
        err << "dybx: " << e.what() << "\n";
        return 2;
    }
    if (!error.empty())
        err << "dybx: " << error << "\n";
    return code;
}

} // namespace dybx
