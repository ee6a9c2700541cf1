#include "dybx/functor.hpp"

#include "dybx/errors.hpp"

namespace dybx {

CMatrix identityMatrix(int n) { return CMatrix::identity(n, Cyclotomic(1), Cyclotomic()); }

GModule::GModule(GroupPtr group, std::string name, std::vector<CMatrix> rho)
    : group_(std::move(group)), name_(std::move(name)), rho_(std::move(rho))
{
    if (static_cast<int>(rho_.size()) != group_->size())
        throw ParseError("module needs one matrix per group element");
    dim_ = rho_[0].rows();
    for (auto& m : rho_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ParseError("module matrices have inconsistent sizes");
    if (rho_[group_->identity()] != identityMatrix(dim_))
        throw DomainError("module: identity does not act as 1");
    for (int g = 0; g < group_->size(); ++g)
        for (int h = 0; h < group_->size(); ++h)
            if (rho_[g] * rho_[h] != rho_[group_->mul(g, h)])
                throw DomainError("module is not multiplicative at (" + group_->label(g) + "," + group_->label(h) + ")");
}

GModule GModule::trivial(GroupPtr group)
{
    std::vector<CMatrix> rho(group->size(), identityMatrix(1));
    return GModule(std::move(group), "trivial", std::move(rho));
}

GModule GModule::regular(GroupPtr group)
{
    const int n = group->size();
    std::vector<CMatrix> rho;
    for (int g = 0; g < n; ++g) {
        CMatrix m(n, n, Cyclotomic());
        for (int h = 0; h < n; ++h)
            m.set(group->mul(g, h), h, Cyclotomic(1));
        rho.push_back(std::move(m));
    }
    return GModule(std::move(group), "regular", std::move(rho));
}

GModule GModule::tensor(const GModule& a, const GModule& b)
{
    std::vector<CMatrix> rho;
    for (int g = 0; g < a.group_->size(); ++g)
        rho.push_back(kron(a.rho_[g], b.rho_[g]));
    return GModule(a.group_, "(" + a.name_ + ")x(" + b.name_ + ")", std::move(rho));
}

CMatrix GModule::act(const TensorElement& a) const
{
    if (a.order() != 1)
        throw DomainError("module action expects an order-1 element");
    CMatrix out(dim_, dim_, Cyclotomic());
    for (auto& [k, c] : a.terms())
        out += rho_[static_cast<int>(k)].scaled(c);
    return out;
}

CMatrix actOn(const TensorElement& t, const std::vector<const GModule*>& modules)
{
    if (static_cast<int>(modules.size()) != t.order())
        throw DomainError("need one module per tensor leg");
    int dim = 1;
    for (auto* m : modules)
        dim *= m->dim();
    CMatrix out(dim, dim, Cyclotomic());
    for (auto& [k, c] : t.terms()) {
        auto d = t.decode(k);
        CMatrix term = modules[0]->rho(d[0]).scaled(c);
        for (int i = 1; i < t.order(); ++i)
            term = kron(term, modules[i]->rho(d[i]));
        out += term;
    }
    return out;
}

AModule AModule::fromWeights(SubgroupPtr a, const std::vector<int>& weights)
{
    AModule m;
    m.subgroup = a;
    m.dim = static_cast<int>(weights.size());
    for (int mu = 0; mu < a->characterCount(); ++mu) {
        CMatrix p(m.dim, m.dim, Cyclotomic());
        for (int i = 0; i < m.dim; ++i) {
            if (weights[i] < 0 || weights[i] >= a->characterCount())
                throw ParseError("weight out of range");
            if (weights[i] == mu)
                p.set(i, i, Cyclotomic(1));
        }
        m.projector.push_back(std::move(p));
    }
    return m;
}

AModule AModule::restriction(const GModule& g, SubgroupPtr a)
{
    AModule m;
    m.subgroup = a;
    m.dim = g.dim();
    for (auto& p : primitiveIdempotents(*a))
        m.projector.push_back(g.act(p));
    return m;
}

CMatrix AModule::act(int b) const
{
    CMatrix out(dim, dim, Cyclotomic());
    for (int mu = 0; mu < subgroup->characterCount(); ++mu)
        out += projector[mu].scaled(subgroup->characterValue(mu, b));
    return out;
}

RepJObject trivialObject(SubgroupPtr a)
{
    RepJObject obj;
    obj.domain = a;
    obj.v = AModule::fromWeights(a, {0});
    const int n = a->characterCount();
    obj.l = [n](const GModule& x) { return LOperator(n, identityMatrix(x.dim())); };
    return obj;
}

namespace {

std::string at(const std::string& x, const std::string& y, int lambda)
{
    return "X=" + x + (y.empty() ? "" : " Y=" + y) + " lambda=" + std::to_string(lambda);
}

std::string describe(const CMatrix& m)
{
    std::string s;
    int shown = 0;
    for (int i = 0; i < m.rows() && shown < 8; ++i)
        for (auto& e : m.row(i)) {
            if (shown++ == 8)
                break;
            s += "[" + std::to_string(i) + "," + std::to_string(e.first) + "]=" + e.second.str() + " ";
        }
    return s + "(" + std::to_string(m.nonzeros()) + " nonzero)";
}

} // namespace

Report checkObject(const RepJObject& obj, const DynamicalMap& j, const std::vector<GModule>& family)
{
    const auto& A = *obj.domain;
    if (!(A == *j.domain()))
        throw DomainError("object and twist live on different character groups");
    const int n = A.characterCount();
    Report rep;
    rep.title = "Rep(J) object";
    rep.add("zero-weight");
    rep.add("tensor-compatibility");
    std::vector<LOperator> L;
    for (auto& X : family) {
        L.push_back(obj.l(X));
        auto aX = AModule::restriction(X, obj.domain);
        for (int l = 0; l < n; ++l)
            for (int g : A.generators()) {
                auto d = kron(aX.act(g), obj.v.act(g));
                auto& m = L.back()[l];
                if (d * m != m * d)
                    rep.checks[0].fail(at(X.name(), "", l), "does not commute with " + A.group().label(g));
            }
    }
    auto jinv = j.inverse();
    for (std::size_t xi = 0; xi < family.size(); ++xi)
        for (std::size_t yi = 0; yi < family.size(); ++yi) {
            const auto& X = family[xi];
            const auto& Y = family[yi];
            std::vector<int> dims{X.dim(), Y.dim(), obj.v.dim};
            auto aY = AModule::restriction(Y, obj.domain);
            auto XY = GModule::tensor(X, Y);
            auto Lxy = obj.l(XY);
            std::vector<CMatrix> J12, J12inv, Lx13, Ly23, PV, PY;
            for (int l = 0; l < n; ++l) {
                J12.push_back(placeOnLegs(actOn(j[l], {&X, &Y}), dims, {0, 1}));
                J12inv.push_back(placeOnLegs(actOn(jinv[l], {&X, &Y}), dims, {0, 1}));
                Lx13.push_back(placeOnLegs(L[xi][l], dims, {0, 2}));
                Ly23.push_back(placeOnLegs(L[yi][l], dims, {1, 2}));
                PV.push_back(placeOnLegs(obj.v.projector[l], dims, {2}));
                PY.push_back(placeOnLegs(aY.projector[l], dims, {1}));
            }
            const int total = dims[0] * dims[1] * dims[2];
            for (int l = 0; l < n; ++l) {
                CMatrix jShift(total, total, Cyclotomic()), lxShift(total, total, Cyclotomic());
                for (int mu = 0; mu < n; ++mu) {
                    int arg = A.subtractCharacters(l, mu);
                    jShift += J12[arg] * PV[mu];
                    lxShift += Lx13[arg] * PY[mu];
                }
                auto lhs = jShift * Ly23[l] * lxShift * J12inv[l];
                if (lhs != Lxy[l])
                    rep.checks[1].fail(at(X.name(), Y.name(), l), describe(lhs - Lxy[l]));
            }
        }
    return rep;
}

Report checkMorphism(const std::vector<CMatrix>& f, const RepJObject& a, const RepJObject& b,
                     const std::vector<GModule>& family)
{
    const auto& A = *a.domain;
    const int n = A.characterCount();
    if (static_cast<int>(f.size()) != n)
        throw DomainError("morphism needs one matrix per lambda");
    Report rep;
    rep.title = "Rep(J) morphism";
    rep.add("intertwines-A");
    rep.add("morphism");
    for (int l = 0; l < n; ++l)
        for (int g : A.generators())
            if (f[l] * a.v.act(g) != b.v.act(g) * f[l])
                rep.checks[0].fail("lambda=" + std::to_string(l), "does not commute with " + A.group().label(g));
    for (auto& X : family) {
        auto La = a.l(X), Lb = b.l(X);
        auto aX = AModule::restriction(X, a.domain);
        auto I = identityMatrix(X.dim());
        for (int l = 0; l < n; ++l) {
            CMatrix shifted(X.dim() * b.v.dim, X.dim() * a.v.dim, Cyclotomic());
            for (int mu = 0; mu < n; ++mu)
                shifted += kron(aX.projector[mu], f[A.subtractCharacters(l, mu)]);
            auto lhs = kron(I, f[l]) * La[l];
            auto rhs = Lb[l] * shifted;
            if (lhs != rhs)
                rep.checks[1].fail(at(X.name(), "", l), describe(lhs - rhs));
        }
    }
    return rep;
}

RepJObject irfVertexFunctor(const RepJObject& obj, const DynamicalMap& x, const TensorElement& jbar)
{
    auto trivial = std::make_shared<AbelianSubgroup>(x.group(), std::vector<int>{x.group()->identity()});
    auto res = vertexIRF(DynamicalMap::constant(trivial, jbar), x);
    if (!res.zeroWeight)
        throw DomainError("x is not a vertex-IRF transformation from jbar: " + res.detail);
    auto A = obj.domain;
    const int n = A->characterCount();
    const int dv = obj.v.dim;
    RepJObject out;
    out.domain = trivial;
    out.v = AModule::fromWeights(trivial, std::vector<int>(dv * n, 0));
    auto xinv = x.inverse();
    auto P = primitiveIdempotents(*A);
    RepJObject src = obj;
    DynamicalMap xs = x;
    out.l = [src, xs, xinv, P, n, dv](const GModule& X) {
        auto L = src.l(X);
        const int dx = X.dim();
        const int block = dx * dv;
        CMatrix op(block * n, block * n, Cyclotomic());
        for (int l = 0; l < n; ++l) {
            // x^1(lambda - h^{(2)})^{-1} L_X(lambda)
            CMatrix m1(block, block, Cyclotomic());
            for (int mu = 0; mu < n; ++mu)
                m1 += kron(X.act(xinv[src.domain->subtractCharacters(l, mu)]), src.v.projector[mu]);
            auto left = m1 * L[l];
            for (int mu = 0; mu < n; ++mu) {
                int lp = src.domain->subtractCharacters(l, mu);
                auto blk = left * kron(X.act(P[mu] * xs[l]), identityMatrix(dv));
                for (int r = 0; r < block; ++r)
                    for (auto& e : blk.row(r))
                        op.set(r * n + l, e.first * n + lp, e.second);
            }
        }
        return LOperator{op};
    };
    return out;
}

CMatrix functorOnMorphism(const std::vector<CMatrix>& f, int lambdaCount)
{
    const int rows = f[0].rows(), cols = f[0].cols();
    CMatrix out(rows * lambdaCount, cols * lambdaCount, Cyclotomic());
    for (int l = 0; l < lambdaCount; ++l)
        for (int r = 0; r < rows; ++r)
            for (auto& e : f[l].row(r))
                out.set(r * lambdaCount + l, e.first * lambdaCount + l, e.second);
    return out;
}

std::vector<std::vector<CMatrix>> differenceKernel(const CMatrix& op, int dimXV, int lambdaCount)
{
    std::vector<std::vector<CMatrix>> k(lambdaCount, std::vector<CMatrix>(lambdaCount, CMatrix(dimXV, dimXV, Cyclotomic())));
    for (int r = 0; r < op.rows(); ++r)
        for (auto& e : op.row(r))
            k[r % lambdaCount][e.first % lambdaCount].set(r / lambdaCount, e.first / lambdaCount, e.second);
    return k;
}

} // namespace dybx
