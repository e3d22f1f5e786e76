#include "dshift/jets.hpp"

#include <algorithm>
#include <numeric>

namespace dshift {

int mi_degree(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double mi_factorial(const MultiIndex& alpha) {
    double f = 1.0;
    for (int a : alpha)
        for (int k = 2; k <= a; ++k) f *= k;
    return f;
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool mi_less(const MultiIndex& a, const MultiIndex& b) {
    int da = mi_degree(a), db = mi_degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {

void enumerate(int dim, int degree_left, MultiIndex& current, std::vector<MultiIndex>& out) {
    if (static_cast<int>(current.size()) == dim - 1) {
        current.push_back(degree_left);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int a = degree_left; a >= 0; --a) {
        current.push_back(a);
        enumerate(dim, degree_left - a, current, out);
        current.pop_back();
    }
}

}  // namespace

JetTable::JetTable(int dim, int order) : dim_(dim), order_(order) {
    if (dim < 1) throw input_error("JetTable: dimension must be at least 1");
    if (order < 0) throw input_error("JetTable: order must be nonnegative");
    for (int deg = 0; deg <= order; ++deg) {
        std::vector<MultiIndex> level;
        MultiIndex current;
        enumerate(dim, deg, current, level);
        std::sort(level.begin(), level.end());
        for (auto& alpha : level) list_.push_back(std::move(alpha));
    }
    for (int i = 0; i < size(); ++i) pos_[list_[static_cast<size_t>(i)]] = i;
}

int JetTable::index(const MultiIndex& alpha) const {
    auto it = pos_.find(alpha);
    return it == pos_.end() ? -1 : it->second;
}

Complex Jet::at(const MultiIndex& alpha) const {
    int idx = table->index(alpha);
    if (idx < 0) throw input_error("Jet::at: multi-index beyond the truncation order");
    return coeff(idx);
}

Jet jet_zero(std::shared_ptr<const JetTable> table) {
    return Jet{table, ComplexVector::Zero(table->size())};
}

Jet jet_const(std::shared_ptr<const JetTable> table, Complex value) {
    Jet j = jet_zero(std::move(table));
    j.coeff(0) = value;
    return j;
}

Jet jet_affine(std::shared_ptr<const JetTable> table, Complex c0, const ComplexVector& linear) {
    if (linear.size() != table->dim())
        throw input_error("jet_affine: linear part has wrong dimension");
    Jet j = jet_zero(table);
    j.coeff(0) = c0;
    if (table->order() >= 1) {
        MultiIndex alpha(static_cast<size_t>(table->dim()), 0);
        for (int k = 0; k < table->dim(); ++k) {
            alpha[static_cast<size_t>(k)] = 1;
            j.coeff(table->index(alpha)) = linear(k);
            alpha[static_cast<size_t>(k)] = 0;
        }
    }
    return j;
}

namespace {

void require_same_table(const Jet& a, const Jet& b, const char* who) {
    if (a.table != b.table &&
        (a.table->dim() != b.table->dim() || a.table->order() != b.table->order()))
        throw input_error(std::string(who) + ": jets over different tables");
}

}  // namespace

Jet jet_add(const Jet& a, const Jet& b) {
    require_same_table(a, b, "jet_add");
    return Jet{a.table, a.coeff + b.coeff};
}

Jet jet_scale(const Jet& a, Complex s) {
    return Jet{a.table, ComplexVector(s * a.coeff)};
}

Jet jet_mul(const Jet& a, const Jet& b) {
    require_same_table(a, b, "jet_mul");
    const JetTable& table = *a.table;
    Jet out = jet_zero(a.table);
    for (int i = 0; i < table.size(); ++i) {
        if (a.coeff(i) == Complex(0)) continue;
        const MultiIndex& alpha = table.at(i);
        int budget = table.order() - mi_degree(alpha);
        for (int j = 0; j < table.size(); ++j) {
            const MultiIndex& beta = table.at(j);
            if (mi_degree(beta) > budget) break;
            if (b.coeff(j) == Complex(0)) continue;
            out.coeff(table.index(mi_add(alpha, beta))) += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

Jet jet_pow(const Jet& a, int p) {
    if (p < 0) throw input_error("jet_pow: negative exponent");
    Jet out = jet_const(a.table, Complex(1));
    for (int k = 0; k < p; ++k) out = jet_mul(out, a);
    return out;
}

Jet jet_recip(const Jet& a) {
    Complex u0 = a.coeff(0);
    if (std::abs(u0) <= tol::invertible)
        throw degeneracy_error("jet_recip: constant term vanishes");
    // a = u0 (1 + s) with s nilpotent past the truncation order, so
    // 1/a = (1/u0) sum_m (-s)^m.
    Jet s = jet_scale(a, Complex(1) / u0);
    s.coeff(0) = Complex(0);
    Jet neg_s = jet_scale(s, Complex(-1));
    Jet out = jet_const(a.table, Complex(1));
    Jet power = jet_const(a.table, Complex(1));
    for (int m = 1; m <= a.table->order(); ++m) {
        power = jet_mul(power, neg_s);
        out = jet_add(out, power);
    }
    return jet_scale(out, Complex(1) / u0);
}

}  // namespace dshift
