#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "idp/error.hpp"

namespace idp {

using Exponent = std::uint32_t;

/// A monomial in n variables, stored as a dense exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1) {
        if (index >= num_vars) throw IndexOutOfRange("variable index " + std::to_string(index));
        Monomial m(num_vars);
        m.exps_[index] = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) s.push_back(i);
        return s;
    }

    /// True iff this monomial divides other.
    bool divides(const Monomial& other) const {
        check_size(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const {
        check_size(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        check_size(other);
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i]))
                throw OverflowError("exponent overflow in monomial product");
        }
        return r;
    }

    /// Exact quotient; the divisor must divide *this.
    Monomial operator/(const Monomial& divisor) const {
        if (!divisor.divides(*this)) throw InternalConsistency("monomial division is not exact");
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
        return r;
    }

    Monomial lcm(const Monomial& other) const {
        check_size(other);
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void check_size(const Monomial& other) const {
        if (other.exps_.size() != exps_.size()) throw DimensionMismatch("monomials over different variable counts");
    }

    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Exponent e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
        return h;
    }
};

/// Lexicographic order given by a ranking of the variables: rank 0 is the largest variable.
class TermOrder {
public:
    /// The identity ranking: variable 0 > variable 1 > ... > variable n-1.
    static TermOrder lex(std::size_t num_vars) {
        std::vector<std::size_t> by_rank(num_vars);
        std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
        return TermOrder(std::move(by_rank));
    }

    /// by_rank[r] is the variable index at rank r; must be a permutation of 0..n-1.
    explicit TermOrder(std::vector<std::size_t> by_rank) : by_rank_(std::move(by_rank)) {
        std::vector<bool> seen(by_rank_.size(), false);
        for (auto v : by_rank_) {
            if (v >= by_rank_.size() || seen[v]) throw ParameterOutOfRange("variable ranking is not a permutation");
            seen[v] = true;
        }
    }

    std::size_t size() const noexcept { return by_rank_.size(); }
    const std::vector<std::size_t>& variable_rank() const noexcept { return by_rank_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != by_rank_.size() || b.size() != by_rank_.size())
            throw DimensionMismatch("term order and monomial variable counts differ");
        for (std::size_t v : by_rank_) {
            if (a[v] != b[v]) return a[v] <=> b[v];
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::size_t> by_rank_;
};

enum class Cmp { Less, Equal, Greater };

/// Pure lex with variable 0 largest.
inline Cmp lex_cmp(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DimensionMismatch("lex_cmp: monomials over different variable counts");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

/// lead - tail with coefficients +1 / -1.
class Binomial {
public:
    Binomial(Monomial lead, Monomial tail) : lead_(std::move(lead)), tail_(std::move(tail)) {
        if (lead_.size() != tail_.size()) throw DimensionMismatch("binomial terms over different variable counts");
        if (lead_ == tail_) throw InternalConsistency("binomial with identical terms");
    }

    /// Builds the binomial u - v or v - u, whichever has the lex-larger term first.
    static Binomial oriented(Monomial u, Monomial v) {
        if (lex_cmp(u, v) == Cmp::Less) std::swap(u, v);
        return Binomial(std::move(u), std::move(v));
    }

    const Monomial& lead() const noexcept { return lead_; }
    const Monomial& tail() const noexcept { return tail_; }
    std::size_t num_vars() const noexcept { return lead_.size(); }

    bool is_homogeneous() const { return lead_.degree() == tail_.degree(); }

    friend bool operator==(const Binomial&, const Binomial&) = default;

private:
    Monomial lead_;
    Monomial tail_;
};

/// Names the variables z_1..z_{r1+3}, y_1..y_d of the toric ring.
struct VariableNames {
    std::size_t num_z = 0;
    std::size_t num_y = 0;

    std::size_t size() const noexcept { return num_z + num_y; }

    std::string operator()(std::size_t idx) const {
        if (idx >= size()) throw IndexOutOfRange("variable index " + std::to_string(idx));
        return idx < num_z ? "z" + std::to_string(idx + 1) : "y" + std::to_string(idx - num_z + 1);
    }
};

/// "z1*z4^2", or "1" for the empty monomial.
inline std::string to_text(const Monomial& m, const VariableNames& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string to_text(const Binomial& b, const VariableNames& names) {
    return to_text(b.lead(), names) + " - " + to_text(b.tail(), names);
}

}  // namespace idp
