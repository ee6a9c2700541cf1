#pragma once

#include "dybx/cyclotomic.hpp"
#include "dybx/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dybx {

/// Element of C[G]^{(x) n} with coefficients in Q(zeta). Legs are numbered from 0;
/// the first leg is the most significant digit of the packed key.
class TensorElement {
public:
    using Key = std::uint64_t;

    TensorElement() = default;
    TensorElement(GroupPtr group, int order);

    static TensorElement unit(GroupPtr group, int order);
    static TensorElement basis(GroupPtr group, const std::vector<int>& elems, const Cyclotomic& c = Cyclotomic(1));

    const GroupPtr& group() const { return group_; }
    int order() const { return order_; }
    const std::map<Key, Cyclotomic>& terms() const { return terms_; }

    Key encode(const std::vector<int>& elems) const;
    std::vector<int> decode(Key key) const;
    Cyclotomic coeff(const std::vector<int>& elems) const;
    void add(const std::vector<int>& elems, const Cyclotomic& c);
    void addKey(Key key, const Cyclotomic& c);

    bool isZero() const { return terms_.empty(); }
    /// True for c * (e (x) ... (x) e).
    bool isScalar() const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Cyclotomic& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Cyclotomic& c) { return a *= c; }
    friend TensorElement operator*(const Cyclotomic& c, TensorElement a) { return a *= c; }
    /// Product in the group algebra, legwise.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    TensorElement operator-() const;
    friend bool operator==(const TensorElement& a, const TensorElement& b);
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /// a (x) b, order n + m.
    TensorElement tensor(const TensorElement& o) const;
    /// Delta on one leg: g -> g (x) g, order n + 1.
    TensorElement coproduct(int leg) const;
    /// epsilon on one leg: g -> 1, order n - 1.
    TensorElement counit(int leg) const;
    /// New leg i carries old leg perm[i].
    TensorElement permuted(const std::vector<int>& perm) const;
    TensorElement flip(int i, int j) const;
    /// Places old leg k at position legs[k] of an order-`newOrder` tensor, with
    /// identity elsewhere (e.g. J^{13} is embed(3, {0, 2})).
    TensorElement embed(int newOrder, const std::vector<int>& legs) const;
    /// Applies g -> g^{-1} on every leg (the antipode, legwise).
    TensorElement antipode() const;

    /// Two-sided inverse by solving the left-multiplication system. nullopt when
    /// singular; `kernelDim` then receives the nullity.
    std::optional<TensorElement> tryInverse(int* kernelDim = nullptr) const;
    /// As tryInverse but throws DomainError naming the kernel dimension.
    TensorElement inverse() const;

    /// "c*[g1,g2] + ..." using group labels, deterministic order.
    std::string str() const;

private:
    void checkCompatible(const TensorElement& o) const;

    GroupPtr group_;
    int order_ = 0;
    std::map<Key, Cyclotomic> terms_;
};

using GroupAlgebraElement = TensorElement;

/// P_mu = |A|^{-1} sum_a mu(a)^{-1} a, indexed by character.
std::vector<TensorElement> primitiveIdempotents(const AbelianSubgroup& a);

/// Weight components on one leg: y_mu = sum_nu P_{nu+mu} y P_nu (P acting on `leg`),
/// so that a y_mu a^{-1} = mu(a) y_mu there. Indexed by character.
std::vector<TensorElement> weightDecompose(const TensorElement& y, const AbelianSubgroup& a, int leg);

/// Commutes with Delta^{(n)}(b) for every b in A.
bool isZeroWeight(const TensorElement& y, const AbelianSubgroup& a);

/// Delta^{(n)}(g) = g (x) ... (x) g.
TensorElement diagonal(GroupPtr group, int g, int order);

} // namespace dybx
