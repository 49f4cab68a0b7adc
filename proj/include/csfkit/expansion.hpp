#ifndef CSFKIT_EXPANSION_HPP
#define CSFKIT_EXPANSION_HPP

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "csfkit/composition.hpp"
#include "csfkit/rational.hpp"

namespace csfkit {

/// Degree-graded sparse expansion in the elementary basis.  Keys are either
/// partitions (ESym, honest symmetric functions) or compositions
/// (CompExpansion, elements of the free algebra F).  Zero coefficients are
/// never stored; every stored key has size == degree.
template <typename Key>
class Expansion {
public:
    Expansion() = default;
    explicit Expansion(Part degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("Expansion: negative degree");
    }

    /// The multiplicative unit: coefficient 1 on the empty index of degree 0.
    static Expansion unit() {
        Expansion e(0);
        e.add_term(Key{}, rat(1));
        return e;
    }

    Part degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    /// Adds c to the coefficient of `key`, pruning zeros.
    void add_term(const Key& key, const Rational& c) {
        if (key.size() != degree_)
            throw std::invalid_argument("Expansion: key size does not match degree");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool operator==(const Expansion& other) const {
        if (is_zero() && other.is_zero()) return true;
        return degree_ == other.degree_ && terms_ == other.terms_;
    }

private:
    Part degree_ = 0;
    std::map<Key, Rational> terms_;
};

using ESym = Expansion<Partition>;
using CompExpansion = Expansion<Composition>;

/// Coefficient-wise sum.  Degrees must agree unless one side is zero.
template <typename Key>
Expansion<Key> add(const Expansion<Key>& f, const Expansion<Key>& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree())
        throw std::invalid_argument("add: degree mismatch");
    Expansion<Key> out = f;
    for (const auto& [key, c] : g.terms()) out.add_term(key, c);
    return out;
}

template <typename Key>
Expansion<Key> scale(const Expansion<Key>& f, const Rational& c) {
    Expansion<Key> out(f.degree());
    if (c == 0) return out;
    for (const auto& [key, coeff] : f.terms()) out.add_term(key, coeff * c);
    return out;
}

template <typename Key>
Expansion<Key> subtract(const Expansion<Key>& f, const Expansion<Key>& g) {
    return add(f, scale(g, rat(-1)));
}

/// Free-algebra product: e_I e_J = e_{IJ}, extended bilinearly.
inline CompExpansion multiply(const CompExpansion& f, const CompExpansion& g) {
    CompExpansion out(f.degree() + g.degree());
    for (const auto& [I, a] : f.terms())
        for (const auto& [J, b] : g.terms())
            out.add_term(Composition::concat(I, J), a * b);
    return out;
}

/// Symmetric-function product: partition keys merge as multisets.
inline ESym multiply(const ESym& f, const ESym& g) {
    ESym out(f.degree() + g.degree());
    for (const auto& [lam, a] : f.terms())
        for (const auto& [mu, b] : g.terms())
            out.add_term(Partition::merge(lam, mu), a * b);
    return out;
}

/// Treat e_I as e_{rho(I)}: sum coefficients over compositions sharing an
/// underlying partition.
inline ESym project(const CompExpansion& f) {
    ESym out(f.degree());
    for (const auto& [I, c] : f.terms()) out.add_term(underlying_partition(I), c);
    return out;
}

inline Rational coeff_composition(const CompExpansion& f, const Composition& K) {
    return f.coeff(K);
}

inline Rational coeff_set(const CompExpansion& f, const std::set<Composition>& C) {
    Rational total(0);
    for (const Composition& K : C) total += f.coeff(K);
    return total;
}

inline Rational coeff_partition(const ESym& g, const Partition& lam) {
    return g.coeff(lam);
}

struct PositivityResult {
    bool positive = true;
    /// Lexicographically smallest partition with a negative coefficient.
    std::optional<std::pair<Partition, Rational>> witness;
};

inline PositivityResult is_e_positive(const ESym& g) {
    for (const auto& [lam, c] : g.terms()) {
        if (c < 0) return {false, std::make_pair(lam, c)};
    }
    return {true, std::nullopt};
}

namespace detail {
inline std::string index_string(const Partition& k) { return k.to_string(); }
inline std::string index_string(const Composition& k) { return k.to_string(); }
}  // namespace detail

/// Human-readable sum, terms in graded reverse-lexicographic order (all keys
/// share the degree, so this is descending lex).  Caps output at `max_terms`
/// with an elision marker plus a total count.
template <typename Key>
std::string to_table_string(const Expansion<Key>& f, std::size_t max_terms = 50) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    std::size_t shown = 0;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [key, c] = *it;
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        if (shown == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << to_compact_string(abs(c)) << " e" << detail::index_string(key);
        ++shown;
    }
    if (f.term_count() > max_terms)
        os << " (" << f.term_count() << " terms total)";
    return os.str();
}

}  // namespace csfkit

#endif
