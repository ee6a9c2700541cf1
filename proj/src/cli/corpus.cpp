#include "dybx/builtin.hpp"
#include "dybx/cli.hpp"
#include "dybx/classify.hpp"
#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"
#include "dybx/formal.hpp"
#include "dybx/functor.hpp"

#include <chrono>
#include <functional>

namespace dybx {

namespace {

void merge(Report& into, const Report& part, const std::string& prefix)
{
    into.append(part, prefix + ": ");
}

void verdict(Report& rep, const std::string& name, bool ok, const std::string& where = {}, const std::string& what = {})
{
    auto& c = rep.add(name);
    if (!ok)
        c.fail(where, what);
}

SubgroupPtr rotations(GroupPtr g, const std::string& generator)
{
    return subgroupGeneratedBy(g, {g->find(generator)});
}

/// lambda-dependent element of C[A]: sum_mu c_mu(lambda) P_mu with nonzero c
/// and c_0 = 1, so the counit is 1.
DynamicalMap abelianValued(SubgroupPtr a)
{
    auto P = primitiveIdempotents(*a);
    DynamicalMap x(a, 1);
    for (int l = 0; l < a->characterCount(); ++l) {
        TensorElement v(a->parent(), 1);
        for (int mu = 0; mu < a->characterCount(); ++mu)
            v += P[mu] * (Cyclotomic(Rational((l + 1) * mu)) + Cyclotomic::zeta(a->exponent(), l * mu));
        x.set(l, v);
    }
    return x;
}

Report s3Suite()
{
    Report rep;
    rep.title = "S3/Z3";
    auto S3 = symmetricGroup(3);
    auto A = rotations(S3, "(123)");
    auto P = primitiveIdempotents(*A);
    auto one = TensorElement::unit(S3, 1);
    TensorElement sum(S3, 1);
    bool idem = true;
    for (int a = 0; a < 3; ++a) {
        sum += P[a];
        for (int b = 0; b < 3; ++b)
            idem = idem && (P[a] * P[b] == (a == b ? P[a] : TensorElement(S3, 1)));
    }
    verdict(rep, "idempotents", idem && sum == one);

    auto trivialA = subgroupGeneratedBy(S3, {});
    auto unit2 = DynamicalMap::constant(trivialA, TensorElement::unit(S3, 2));
    auto transposition = DynamicalMap::constant(A, TensorElement::basis(S3, {S3->find("(12)")}));
    auto constant = twistFromX(transposition);
    verdict(rep, "transposition-gives-unit", constant.twist == DynamicalMap::constant(A, TensorElement::unit(S3, 2)));
    int n = 0;
    for (auto x : {transposition, abelianValued(A), transposition * abelianValued(A)}) {
        std::string tag = "x" + std::to_string(++n);
        auto t = twistFromX(x);
        verdict(rep, tag + " zero-weight", t.zeroWeight, "", t.detail);
        merge(rep, checkTwist(t.twist), tag);
        auto R = dynamicalR(t.twist);
        merge(rep, checkQDYBE(R), tag);
        merge(rep, checkRmatRelation(R, unit2, x), tag);
    }
    return rep;
}

Report classificationSuite()
{
    Report rep;
    rep.title = "classification";
    for (auto [G, gen, expected] : {std::tuple{symmetricGroup(3), "(123)", 6}, std::tuple{dihedralGroup(4), "r", -1}}) {
        auto A = rotations(G, gen);
        auto fs = realizableFs(*A);
        std::string tag = std::to_string(G->size()) + "/" + std::to_string(A->size());
        if (expected >= 0)
            verdict(rep, tag + " count", static_cast<int>(fs.size()) == expected, "count", std::to_string(fs.size()));
        for (auto& f : fs) {
            auto w = findGroupWitness(*A, f);
            if (!w)
                continue;
            auto q = quasiGrouplike(A, *w, f);
            std::string name = tag + " f=";
            for (int v : f)
                name += std::to_string(v);
            verdict(rep, name + " formulas-agree", q.agree);
            merge(rep, checkTwist(q.twist), name);
            // f is only determined up to an additive constant; recoverF returns f - f(0).
            Bijection normalized(f.size());
            for (std::size_t l = 0; l < f.size(); ++l)
                normalized[l] = A->subtractCharacters(f[l], f[0]);
            verdict(rep, name + " recoverF", recoverF(q.x) == normalized);
        }
    }
    return rep;
}

Report functorSuite()
{
    Report rep;
    rep.title = "functor";
    auto S3 = symmetricGroup(3);
    auto A = rotations(S3, "(123)");
    auto x = DynamicalMap::constant(A, TensorElement::basis(S3, {S3->find("(12)")})) * abelianValued(A);
    auto J = twistFromX(x).twist;
    std::vector<GModule> family{GModule::regular(S3)};
    auto triv = trivialObject(A);
    merge(rep, checkObject(triv, J, family), "trivial object");
    auto one = TensorElement::unit(S3, 2);
    auto img = irfVertexFunctor(triv, x, one);
    merge(rep, checkObject(img, DynamicalMap::constant(img.domain, one), family), "image");
    auto back = irfVertex(J, x.inverse(), subgroupGeneratedBy(S3, {}));
    verdict(rep, "irf-vertex-returns-unit",
            back.zeroWeight && back.twist == DynamicalMap::constant(back.twist.domain(), one), "", back.detail);
    return rep;
}

Report classicalSuite()
{
    Report rep;
    rep.title = "classical";
    auto s2 = JetShape::get(2, 4, 0);
    auto t1 = JetScalar::variable(s2, 0), t2 = JetScalar::variable(s2, 1);
    auto rn = rNF(2, {t1 + t1 * t2, t2 + t1 * t1 * Rational(1, 2)});
    merge(rep, rn.result.report, "rnf");
    merge(rep, checkCDYBE(rn.result.r), "rnf");
    auto deg = completeDegeneracy(rn.result.r);
    merge(rep, deg.report, "rnf");
    if (deg.family) {
        merge(rep, checkFlatness(*deg.family), "rnf");
        merge(rep, reconstructGamma(*deg.family, *rn.rep).report, "rnf");
    }
    auto s1 = JetShape::get(1, 4, 0);
    FunctionJet f{{0, 1, Rational(1, 2), Rational(1, 6)}, -1};
    auto r1 = rNF(1, {derivativeJet(f, s1, 0)});
    merge(rep, checkCDYBE(r1.result.r), "rank-one");
    return rep;
}

Report rankOneFormalSuite()
{
    Report rep;
    rep.title = "rank-one formal";
    const int K = 3, D = 4;
    FunctionJet f{{0, 1, Rational(1, 2)}, -1};
    merge(rep, pinConventions(f, K, D).report, "pin");
    auto j = gl1Twist(f, K, D);
    merge(rep, checkFormalTwist(j), "gl1");
    auto shape = JetShape::get(1, D, K);
    auto lim = quasiClassicalLimit(j);
    merge(rep, lim.report, "gl1");
    verdict(rep, "gl1 limit-equals-rnf", lim.r.equals(rNF(1, {derivativeJet(f, shape, 0)}).result.r));
    merge(rep, crossCheckRankOne(f, K, D), "cross-check");
    return rep;
}

Report gl2FormalSuite()
{
    Report rep;
    rep.title = "gl(2) formal";
    auto s2 = JetShape::get(2, 5, 3);
    auto t1 = JetScalar::variable(s2, 0), t2 = JetScalar::variable(s2, 1);
    auto rn = rNF(2, {t1 + t1 * t2, t2 + t2 * t2});
    merge(rep, quantizeRep(rn.gamma).report, "quantize");
    return rep;
}

} // namespace

std::vector<SuiteResult> runCorpus()
{
    std::vector<std::pair<std::string, std::function<Report()>>> suites{
        {"s3-z3", s3Suite},          {"classification", classificationSuite}, {"functor", functorSuite},
        {"classical", classicalSuite}, {"rank-one-formal", rankOneFormalSuite}, {"gl2-formal", gl2FormalSuite},
    };
    std::vector<SuiteResult> out;
    for (auto& [name, run] : suites) {
        auto start = std::chrono::steady_clock::now();
        Report r;
        try {
            r = run();
        } catch (const DomainError& e) {
            r.title = name;
            r.add("precondition").fail("", e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back({name, std::move(r), secs});
    }
    return out;
}

} // namespace dybx
