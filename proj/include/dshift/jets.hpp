#pragma once

// Truncated Taylor arithmetic in d complex variables.  A jet stores plain
// power-series coefficients t_alpha of f(base + h) = sum t_alpha h^alpha up
// to a fixed total degree; derivatives are recovered as alpha! * t_alpha.

#include <map>
#include <memory>
#include <vector>

#include "dshift/types.hpp"

namespace dshift {

using MultiIndex = std::vector<int>;

int mi_degree(const MultiIndex& alpha);
double mi_factorial(const MultiIndex& alpha);
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);
bool mi_leq(const MultiIndex& a, const MultiIndex& b);  // componentwise

// Graded ordering used for enumeration: degree first, then lexicographic.
bool mi_less(const MultiIndex& a, const MultiIndex& b);

// Dense enumeration of all multi-indexes with |alpha| <= order in the graded
// order above, with reverse lookup.
class JetTable {
public:
    JetTable(int dim, int order);

    int dim() const { return dim_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(list_.size()); }
    const MultiIndex& at(int idx) const { return list_[static_cast<size_t>(idx)]; }

    // Position of alpha, or -1 when |alpha| exceeds the table order.
    int index(const MultiIndex& alpha) const;

private:
    int dim_;
    int order_;
    std::vector<MultiIndex> list_;
    std::map<MultiIndex, int> pos_;
};

struct Jet {
    std::shared_ptr<const JetTable> table;
    ComplexVector coeff;

    Complex at(const MultiIndex& alpha) const;
};

Jet jet_zero(std::shared_ptr<const JetTable> table);
Jet jet_const(std::shared_ptr<const JetTable> table, Complex value);

// The affine function c0 + sum_k linear[k] * h_k.
Jet jet_affine(std::shared_ptr<const JetTable> table, Complex c0, const ComplexVector& linear);

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, Complex s);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_pow(const Jet& a, int p);

// Reciprocal of a jet whose constant term is a unit, via the Neumann series
// truncated at the table order.  Throws degeneracy_error at a vanishing
// constant term.
Jet jet_recip(const Jet& a);

}  // namespace dshift
