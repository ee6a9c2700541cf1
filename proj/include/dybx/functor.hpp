#pragma once

#include "dybx/dyntwist.hpp"
#include "dybx/matrix.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dybx {

using CMatrix = SparseMatrix<Cyclotomic>;

CMatrix identityMatrix(int n);

/// Representation of G by matrices over Q(zeta).
class GModule {
public:
    GModule(GroupPtr group, std::string name, std::vector<CMatrix> rho);

    static GModule trivial(GroupPtr group);
    static GModule regular(GroupPtr group);
    static GModule tensor(const GModule& a, const GModule& b);

    const GroupPtr& group() const { return group_; }
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const CMatrix& rho(int g) const { return rho_[g]; }
    /// Image of an order-1 group algebra element.
    CMatrix act(const TensorElement& a) const;

private:
    GroupPtr group_;
    std::string name_;
    int dim_;
    std::vector<CMatrix> rho_;
};

/// Image of an order-n tensor on X_1 (x) ... (x) X_n.
CMatrix actOn(const TensorElement& t, const std::vector<const GModule*>& modules);

/// A-module given by its weight projectors P_mu, indexed by character.
struct AModule {
    SubgroupPtr subgroup;
    int dim = 0;
    std::vector<CMatrix> projector;

    static AModule fromWeights(SubgroupPtr a, const std::vector<int>& weights);
    static AModule restriction(const GModule& m, SubgroupPtr a);
    /// Image of b in A.
    CMatrix act(int b) const;
};

/// L_X(lambda) for every lambda of the domain.
using LOperator = std::vector<CMatrix>;

/// Object of Rep(J): an A-module V and X -> L_X.
struct RepJObject {
    SubgroupPtr domain;
    AModule v;
    std::function<LOperator(const GModule&)> l;
};

/// V trivial, L = 1.
RepJObject trivialObject(SubgroupPtr a);

/// J^{12}(l - h3) L_Y^{23}(l) L_X^{13}(l - h2) J^{12}(l)^{-1} = L_{X (x) Y} for all pairs
/// from `family`, plus the zero-weight precondition of each L_X.
Report checkObject(const RepJObject& obj, const DynamicalMap& j, const std::vector<GModule>& family);

/// (1 (x) f(l)) L_X(l) = L'_X(l) (1 (x) f(l - h1)), f(l): V -> V'.
Report checkMorphism(const std::vector<CMatrix>& f, const RepJObject& a, const RepJObject& b,
                     const std::vector<GModule>& family);

/// Image of (V, L) under the IRF-vertex functor for a vertex-IRF transformation x
/// from the constant twist jbar to J = vertexIRF(jbar, x). The result lives on
/// V (x) F(A*) (basis index v * |A*| + lambda) over the trivial subgroup.
RepJObject irfVertexFunctor(const RepJObject& obj, const DynamicalMap& x, const TensorElement& jbar);

/// The functor on morphisms: multiplication by f(lambda) on V (x) F(A*).
CMatrix functorOnMorphism(const std::vector<CMatrix>& f, int lambdaCount);

/// Kernel blocks K(lambda, lambda') of an operator on X (x) V (x) F(A*).
std::vector<std::vector<CMatrix>> differenceKernel(const CMatrix& op, int dimXV, int lambdaCount);

} // namespace dybx
