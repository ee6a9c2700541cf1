#pragma once

#include "dybx/report.hpp"
#include "dybx/tensor.hpp"

#include <optional>
#include <vector>

namespace dybx {

/// Function A* -> C[G]^{(x) n}, stored as one value per character index.
class DynamicalMap {
public:
    DynamicalMap() = default;
    DynamicalMap(SubgroupPtr domain, int order);
    static DynamicalMap constant(SubgroupPtr domain, const TensorElement& value);

    const SubgroupPtr& domain() const { return domain_; }
    const GroupPtr& group() const { return domain_->parent(); }
    int order() const { return order_; }
    int size() const { return static_cast<int>(values_.size()); }

    const TensorElement& operator[](int lambda) const { return values_[lambda]; }
    void set(int lambda, TensorElement value);

    friend DynamicalMap operator*(const DynamicalMap& a, const DynamicalMap& b);
    friend DynamicalMap operator+(const DynamicalMap& a, const DynamicalMap& b);
    friend DynamicalMap operator-(const DynamicalMap& a, const DynamicalMap& b);
    friend bool operator==(const DynamicalMap& a, const DynamicalMap& b);
    friend bool operator!=(const DynamicalMap& a, const DynamicalMap& b) { return !(a == b); }

    /// Pointwise inverse; throws DomainError naming the first singular lambda.
    DynamicalMap inverse() const;
    DynamicalMap embed(int newOrder, const std::vector<int>& legs) const;
    DynamicalMap permuted(const std::vector<int>& perm) const;
    DynamicalMap coproduct(int leg) const;
    DynamicalMap counit(int leg) const;

private:
    SubgroupPtr domain_;
    int order_ = 0;
    std::vector<TensorElement> values_;
};

/// F(lambda + sign*h^{(leg)}) = sum_mu F(lambda + sign*mu) P_mu^{leg}; with `hat`
/// the idempotent multiplies from the left instead.
DynamicalMap shift(const DynamicalMap& f, int leg, int sign, bool hat = false);

/// Report whose residuals are kept as tensors next to the printable findings.
struct TwistReport : Report {
    struct Residual {
        std::string check;
        int lambda;
        TensorElement value;
    };
    std::vector<Residual> residuals;

    void record(CheckResult& check, int lambda, const TensorElement& value);
    /// Characters at which `check` failed.
    std::vector<int> failingLambdas(const std::string& check) const;
};

/// Zero weight, invertibility, shifted cocycle and counit for every lambda.
TwistReport checkTwist(const DynamicalMap& j);

/// Zero weight, invertibility and counit of an order-1 map, w.r.t. `weights`.
TwistReport checkTransformation(const DynamicalMap& x, const AbelianSubgroup& weights);

/// J^x(lambda) = Delta(x) J x^1(lambda - h^{(2)})^{-1} x^2(lambda)^{-1}.
/// Throws DomainError when x is not a gauge transformation.
DynamicalMap gauge(const DynamicalMap& j, const DynamicalMap& x);

struct TransformResult {
    DynamicalMap twist;
    bool zeroWeight = false;
    std::string detail;
};

/// Index over Abar* of the restriction of each lambda in A*.
std::vector<int> restrictionMap(const AbelianSubgroup& a, const AbelianSubgroup& abar);

/// J^x(lambda) = Delta(x) Jbar(lambda|Abar) x^2(lambda)^{-1} x^1(lambda - h^{(2)})^{-1},
/// with the verdict that J^x has zero weight for A.
TransformResult vertexIRF(const DynamicalMap& jbar, const DynamicalMap& x);

/// J^x as in the gauge formula, descended to Abar* when constant on the fibres of
/// A* -> Abar*. On failure `detail` names a differing pair and `twist` is empty.
TransformResult irfVertex(const DynamicalMap& j, const DynamicalMap& x, SubgroupPtr abar);

/// J(lambda) = Delta(x) x^2(lambda)^{-1} x^1(lambda - h^{(2)})^{-1}, zero-weight verdict.
TransformResult twistFromX(const DynamicalMap& x);

/// R(lambda) = J^{21}(lambda)^{-1} Runiv J(lambda).
DynamicalMap dynamicalR(const DynamicalMap& j, const std::optional<TensorElement>& runiv = std::nullopt);

/// Both sides of the QDYBE in the active convention.
std::pair<DynamicalMap, DynamicalMap> qdybeSides(const DynamicalMap& r);
TwistReport checkQDYBE(const DynamicalMap& r);

/// R(lambda) = x^2(lambda - h^{(1)}) x^1(lambda) Rbar(lambda|Abar) x^2(lambda)^{-1} x^1(lambda - h^{(2)})^{-1}.
TwistReport checkRmatRelation(const DynamicalMap& r, const DynamicalMap& rbar, const DynamicalMap& x);

} // namespace dybx
