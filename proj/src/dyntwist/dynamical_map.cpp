#include "dybx/dyntwist.hpp"

#include "dybx/errors.hpp"
#include "dybx/parallel.hpp"

namespace dybx {

DynamicalMap::DynamicalMap(SubgroupPtr domain, int order)
    : domain_(std::move(domain)), order_(order),
      values_(domain_->characterCount(), TensorElement(domain_->parent(), order))
{
}

DynamicalMap DynamicalMap::constant(SubgroupPtr domain, const TensorElement& value)
{
    DynamicalMap m(std::move(domain), value.order());
    for (auto& v : m.values_)
        v = value;
    return m;
}

void DynamicalMap::set(int lambda, TensorElement value)
{
    if (value.order() != order_)
        throw DomainError("dynamical map value has order " + std::to_string(value.order()) + ", expected " +
                          std::to_string(order_));
    values_.at(lambda) = std::move(value);
}

namespace {

void checkSameDomain(const DynamicalMap& a, const DynamicalMap& b)
{
    if (!(*a.domain() == *b.domain()))
        throw DomainError("dynamical maps over different character groups");
}

template <class F>
DynamicalMap pointwise(const DynamicalMap& a, int order, F&& f)
{
    DynamicalMap r(a.domain(), order);
    std::vector<TensorElement> vals(a.size());
    parallelFor(a.size(), [&](int l) { vals[l] = f(l); });
    for (int l = 0; l < a.size(); ++l)
        r.set(l, std::move(vals[l]));
    return r;
}

} // namespace

DynamicalMap operator*(const DynamicalMap& a, const DynamicalMap& b)
{
    checkSameDomain(a, b);
    return pointwise(a, a.order(), [&](int l) { return a[l] * b[l]; });
}

DynamicalMap operator+(const DynamicalMap& a, const DynamicalMap& b)
{
    checkSameDomain(a, b);
    return pointwise(a, a.order(), [&](int l) { return a[l] + b[l]; });
}

DynamicalMap operator-(const DynamicalMap& a, const DynamicalMap& b)
{
    checkSameDomain(a, b);
    return pointwise(a, a.order(), [&](int l) { return a[l] - b[l]; });
}

bool operator==(const DynamicalMap& a, const DynamicalMap& b)
{
    if (a.order() != b.order() || !(*a.domain() == *b.domain()))
        return false;
    for (int l = 0; l < a.size(); ++l)
        if (a[l] != b[l])
            return false;
    return true;
}

DynamicalMap DynamicalMap::inverse() const
{
    return pointwise(*this, order_, [&](int l) {
        int k = 0;
        auto inv = values_[l].tryInverse(&k);
        if (!inv)
            throw DomainError("value at lambda=" + std::to_string(l) + " is not invertible (kernel dimension " +
                              std::to_string(k) + ")");
        return *inv;
    });
}

DynamicalMap DynamicalMap::embed(int newOrder, const std::vector<int>& legs) const
{
    return pointwise(*this, newOrder, [&](int l) { return values_[l].embed(newOrder, legs); });
}

DynamicalMap DynamicalMap::permuted(const std::vector<int>& perm) const
{
    return pointwise(*this, order_, [&](int l) { return values_[l].permuted(perm); });
}

DynamicalMap DynamicalMap::coproduct(int leg) const
{
    return pointwise(*this, order_ + 1, [&](int l) { return values_[l].coproduct(leg); });
}

DynamicalMap DynamicalMap::counit(int leg) const
{
    return pointwise(*this, order_ - 1, [&](int l) { return values_[l].counit(leg); });
}

DynamicalMap shift(const DynamicalMap& f, int leg, int sign, bool hat)
{
    if (leg < 0 || leg >= f.order())
        throw DomainError("shift leg " + std::to_string(leg) + " out of range for order " + std::to_string(f.order()));
    const auto& A = *f.domain();
    auto P = primitiveIdempotents(A);
    std::vector<TensorElement> placed;
    for (auto& p : P)
        placed.push_back(p.embed(f.order(), {leg}));
    return pointwise(f, f.order(), [&](int l) {
        TensorElement acc(f.group(), f.order());
        for (int mu = 0; mu < A.characterCount(); ++mu) {
            int arg = sign >= 0 ? A.addCharacters(l, mu) : A.subtractCharacters(l, mu);
            acc += hat ? placed[mu] * f[arg] : f[arg] * placed[mu];
        }
        return acc;
    });
}

} // namespace dybx
