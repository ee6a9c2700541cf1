#include "dybx/dyntwist.hpp"

#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"

namespace dybx {

void TwistReport::record(CheckResult& check, int lambda, const TensorElement& value)
{
    check.fail("lambda=" + std::to_string(lambda), value.str());
    residuals.push_back({check.name, lambda, value});
}

std::vector<int> TwistReport::failingLambdas(const std::string& check) const
{
    std::vector<int> out;
    for (auto& r : residuals)
        if (r.check == check)
            out.push_back(r.lambda);
    return out;
}

namespace {

/// x^1(lambda - h^{(2)})^{-1} as an order-2 map.
DynamicalMap shiftedFirstLegInverse(const DynamicalMap& xinv)
{
    return shift(xinv.embed(2, {0}), 1, -1);
}

} // namespace

TwistReport checkTwist(const DynamicalMap& j)
{
    if (j.order() != 2)
        throw DomainError("a twist has tensor order 2");
    TwistReport rep;
    rep.title = "dynamical twist";
    const auto& A = *j.domain();
    auto unit1 = TensorElement::unit(j.group(), 1);

    rep.add("zero-weight");
    rep.add("invertible");
    rep.add("shifted-cocycle");
    rep.add("counit");
    auto& zw = rep.checks[0];
    auto& inv = rep.checks[1];
    auto& cocycle = rep.checks[2];
    auto& counit = rep.checks[3];

    for (int l = 0; l < j.size(); ++l) {
        if (!isZeroWeight(j[l], A)) {
            auto parts = weightDecompose(j[l], A, 0);
            TensorElement off(j.group(), 2);
            for (int mu = 1; mu < A.characterCount(); ++mu)
                off += parts[mu];
            rep.record(zw, l, off);
        }
        int k = 0;
        if (!j[l].tryInverse(&k))
            inv.fail("lambda=" + std::to_string(l), "kernel dimension " + std::to_string(k));
    }

    // J^{12,3}(l) J^{12}(l - h3) = J^{1,23}(l) J^{23}(l)
    auto lhs = j.coproduct(0) * shift(j.embed(3, {0, 1}), 2, -1);
    auto rhs = j.coproduct(1) * j.embed(3, {1, 2});
    for (int l = 0; l < j.size(); ++l)
        if (lhs[l] != rhs[l])
            rep.record(cocycle, l, lhs[l] - rhs[l]);

    for (int l = 0; l < j.size(); ++l) {
        auto a = j[l].counit(0), b = j[l].counit(1);
        if (a != unit1)
            rep.record(counit, l, a - unit1);
        if (b != unit1)
            rep.record(counit, l, b - unit1);
    }
    return rep;
}

TwistReport checkTransformation(const DynamicalMap& x, const AbelianSubgroup& weights)
{
    if (x.order() != 1)
        throw DomainError("a transformation has tensor order 1");
    TwistReport rep;
    rep.title = "transformation";
    rep.add("zero-weight");
    rep.add("invertible");
    rep.add("counit");
    auto one = TensorElement::unit(x.group(), 0);
    for (int l = 0; l < x.size(); ++l) {
        if (!isZeroWeight(x[l], weights)) {
            auto parts = weightDecompose(x[l], weights, 0);
            TensorElement off(x.group(), 1);
            for (int mu = 1; mu < weights.characterCount(); ++mu)
                off += parts[mu];
            rep.record(rep.checks[0], l, off);
        }
        int k = 0;
        if (!x[l].tryInverse(&k))
            rep.checks[1].fail("lambda=" + std::to_string(l), "kernel dimension " + std::to_string(k));
        auto e = x[l].counit(0);
        if (e != one)
            rep.record(rep.checks[2], l, e - one);
    }
    return rep;
}

namespace {

void requireTransformation(const DynamicalMap& x, const AbelianSubgroup& weights, const std::string& what)
{
    auto rep = checkTransformation(x, weights);
    if (rep.pass())
        return;
    std::string msg = what + " precondition failed:";
    for (auto& c : rep.checks)
        for (auto& f : c.findings)
            msg += " [" + c.name + " at " + f.where + "]";
    throw DomainError(msg);
}

} // namespace

DynamicalMap gauge(const DynamicalMap& j, const DynamicalMap& x)
{
    requireTransformation(x, *x.domain(), "gauge");
    auto xinv = x.inverse();
    return x.coproduct(0) * j * shiftedFirstLegInverse(xinv) * xinv.embed(2, {1});
}

std::vector<int> restrictionMap(const AbelianSubgroup& a, const AbelianSubgroup& abar)
{
    std::vector<int> out(a.characterCount());
    for (int l = 0; l < a.characterCount(); ++l)
        out[l] = a.restrictCharacter(l, abar);
    return out;
}

TransformResult vertexIRF(const DynamicalMap& jbar, const DynamicalMap& x)
{
    const auto& A = *x.domain();
    const auto& Abar = *jbar.domain();
    requireTransformation(x, Abar, "vertex-IRF");
    auto proj = restrictionMap(A, Abar);
    DynamicalMap lifted(x.domain(), 2);
    for (int l = 0; l < x.size(); ++l)
        lifted.set(l, jbar[proj[l]]);
    auto xinv = x.inverse();
    TransformResult res;
    res.twist = x.coproduct(0) * lifted * xinv.embed(2, {1}) * shiftedFirstLegInverse(xinv);
    res.zeroWeight = true;
    for (int l = 0; l < x.size(); ++l)
        if (!isZeroWeight(res.twist[l], A)) {
            res.zeroWeight = false;
            res.detail = "not of zero weight at lambda=" + std::to_string(l);
            break;
        }
    return res;
}

TransformResult irfVertex(const DynamicalMap& j, const DynamicalMap& x, SubgroupPtr abar)
{
    const auto& A = *x.domain();
    requireTransformation(x, *abar, "IRF-vertex");
    auto xinv = x.inverse();
    auto full = x.coproduct(0) * j * shiftedFirstLegInverse(xinv) * xinv.embed(2, {1});
    auto proj = restrictionMap(A, *abar);
    TransformResult res;
    res.twist = DynamicalMap(abar, 2);
    std::vector<int> rep(abar->characterCount(), -1);
    for (int l = 0; l < A.characterCount(); ++l) {
        int b = proj[l];
        if (rep[b] < 0) {
            rep[b] = l;
            res.twist.set(b, full[l]);
        } else if (full[l] != full[rep[b]]) {
            res.zeroWeight = false;
            res.detail = "not constant on fibre: lambda=" + std::to_string(rep[b]) + " and lambda=" + std::to_string(l);
            res.twist = DynamicalMap();
            return res;
        }
    }
    res.zeroWeight = true;
    return res;
}

TransformResult twistFromX(const DynamicalMap& x)
{
    auto xinv = x.inverse();
    TransformResult res;
    res.twist = x.coproduct(0) * xinv.embed(2, {1}) * shiftedFirstLegInverse(xinv);
    res.zeroWeight = true;
    for (int l = 0; l < x.size(); ++l)
        if (!isZeroWeight(res.twist[l], *x.domain())) {
            res.zeroWeight = false;
            res.detail = "not of zero weight at lambda=" + std::to_string(l);
            break;
        }
    return res;
}

DynamicalMap dynamicalR(const DynamicalMap& j, const std::optional<TensorElement>& runiv)
{
    auto j21inv = j.permuted({1, 0}).inverse();
    if (!runiv)
        return j21inv * j;
    return j21inv * DynamicalMap::constant(j.domain(), *runiv) * j;
}

std::pair<DynamicalMap, DynamicalMap> qdybeSides(const DynamicalMap& r)
{
    if (r.order() != 2)
        throw DomainError("an R-matrix has tensor order 2");
    auto r12 = r.embed(3, {0, 1}), r13 = r.embed(3, {0, 2}), r23 = r.embed(3, {1, 2});
    if (conventions().qdybeFelder)
        return {shift(r12, 2, -1) * r13 * shift(r23, 0, -1), r23 * shift(r13, 1, -1) * r12};
    return {r12 * shift(r13, 1, -1) * r23, shift(r23, 0, -1) * r13 * shift(r12, 2, -1)};
}

TwistReport checkQDYBE(const DynamicalMap& r)
{
    TwistReport rep;
    rep.title = "QDYBE";
    auto [lhs, rhs] = qdybeSides(r);
    rep.add("qdybe");
    for (int l = 0; l < r.size(); ++l)
        if (lhs[l] != rhs[l])
            rep.record(rep.checks[0], l, lhs[l] - rhs[l]);
    return rep;
}

TwistReport checkRmatRelation(const DynamicalMap& r, const DynamicalMap& rbar, const DynamicalMap& x)
{
    auto proj = restrictionMap(*x.domain(), *rbar.domain());
    DynamicalMap lifted(x.domain(), 2);
    for (int l = 0; l < x.size(); ++l)
        lifted.set(l, rbar[proj[l]]);
    auto xinv = x.inverse();
    auto x2shift = shift(x.embed(2, {1}), 0, -1);
    auto rhs = x2shift * x.embed(2, {0}) * lifted * xinv.embed(2, {1}) * shiftedFirstLegInverse(xinv);
    TwistReport rep;
    rep.title = "R-matrix relation";
    rep.add("r-matrix-relation");
    for (int l = 0; l < x.size(); ++l)
        if (r[l] != rhs[l])
            rep.record(rep.checks[0], l, r[l] - rhs[l]);
    return rep;
}

} // namespace dybx
