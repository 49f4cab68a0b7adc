#ifndef CSFKIT_COMPOSITION_HPP
#define CSFKIT_COMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace csfkit {

/// Parts are machine integers; everything this library touches has size <= 64,
/// far below the representable limit.
using Part = std::int64_t;

/// A composition: a finite sequence of positive integer parts.  The empty
/// composition (size 0, length 0) is a first-class value.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
        for (Part p : parts_) {
            if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
        }
    }

    Composition(std::initializer_list<Part> parts)
        : Composition(std::vector<Part>(parts)) {}

    const std::vector<Part>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Part size() const {
        return std::accumulate(parts_.begin(), parts_.end(), Part{0});
    }

    Part at(std::size_t i) const { return parts_.at(i); }

    Part first() const {
        if (parts_.empty()) throw std::logic_error("Composition: first() of empty composition");
        return parts_.front();
    }

    /// The last part, written i_{-1} in negative-index notation.
    Part last() const {
        if (parts_.empty()) throw std::logic_error("Composition: last() of empty composition");
        return parts_.back();
    }

    bool all_parts_at_least(Part m) const {
        return std::all_of(parts_.begin(), parts_.end(), [m](Part p) { return p >= m; });
    }

    static Composition concat(const Composition& a, const Composition& b) {
        std::vector<Part> parts;
        parts.reserve(a.length() + b.length());
        parts.insert(parts.end(), a.parts_.begin(), a.parts_.end());
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        Composition out;
        out.parts_ = std::move(parts);
        return out;
    }

    /// Prefix consisting of the first `count` parts.
    Composition take(std::size_t count) const {
        if (count > parts_.size()) throw std::out_of_range("Composition: take past end");
        Composition out;
        out.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(count));
        return out;
    }

    /// Suffix after dropping the first `count` parts.
    Composition drop(std::size_t count) const {
        if (count > parts_.size()) throw std::out_of_range("Composition: drop past end");
        Composition out;
        out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(count), parts_.end());
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<Part> parts_;
};

/// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<Part> parts)
        : Partition(std::vector<Part>(parts)) {}

    const std::vector<Part>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Part size() const {
        return std::accumulate(parts_.begin(), parts_.end(), Part{0});
    }

    /// Multiset union of two partitions, re-sorted.
    static Partition merge(const Partition& a, const Partition& b) {
        std::vector<Part> parts;
        parts.reserve(a.length() + b.length());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   std::back_inserter(parts), std::greater<Part>());
        Partition out;
        out.parts_ = std::move(parts);
        return out;
    }

    Composition as_composition() const { return Composition(parts_); }

    std::string to_string() const { return as_composition().to_string(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Part> parts_;
};

/// rho(I): rearrange the parts into weakly decreasing order.
inline Partition underlying_partition(const Composition& I) {
    std::vector<Part> parts = I.parts();
    std::sort(parts.begin(), parts.end(), std::greater<Part>());
    return Partition(std::move(parts));
}

/// The set W_n of compositions of n with every part >= 2, in lexicographic
/// order.  n = 0 yields the singleton list holding the empty composition.
inline std::vector<Composition> enumerate_no_ones(Part n) {
    if (n < 0) throw std::invalid_argument("enumerate_no_ones: n must be >= 0");
    std::vector<Composition> out;
    std::vector<Part> stack;
    auto rec = [&](auto&& self, Part remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(Composition(stack));
            return;
        }
        for (Part p = 2; p <= remaining; ++p) {
            if (remaining - p == 1) continue;  // would strand a part 1
            stack.push_back(p);
            self(self, remaining - p);
            stack.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// True when some partial sum of K (including the empty prefix 0 and the
/// whole composition) equals p.
inline bool has_prefix_of_size(const Composition& K, Part p) {
    if (p == 0) return true;
    Part acc = 0;
    for (Part part : K.parts()) {
        acc += part;
        if (acc == p) return true;
        if (acc > p) return false;
    }
    return false;
}

/// True when some suffix of K (including the empty suffix and all of K) has size p.
inline bool has_suffix_of_size(const Composition& K, Part p) {
    if (p < 0 || p > K.size()) return false;
    return has_prefix_of_size(K, K.size() - p);
}

/// W_n(p): members of W_n with a prefix of size p (p = 0 and p = n qualify).
inline std::vector<Composition> enumerate_no_ones_with_prefix(Part n, Part p) {
    std::vector<Composition> out;
    for (const Composition& K : enumerate_no_ones(n)) {
        if (has_prefix_of_size(K, p)) out.push_back(K);
    }
    return out;
}

/// w_I = i_1 (i_2 - 1)(i_3 - 1) ... (i_z - 1); the empty composition gets the
/// empty product 1.
inline std::int64_t w_weight(const Composition& I) {
    if (I.empty()) return 1;
    std::int64_t w = I.first();
    for (std::size_t k = 1; k < I.length(); ++k) w *= I.at(k) - 1;
    return w;
}

/// w'_{k_1...k_z} = (k_2 - 1) ... (k_z - 1); undefined on the empty composition.
inline std::int64_t w_prime(const Composition& K) {
    if (K.empty()) throw std::invalid_argument("w_prime: empty composition has no leading part");
    std::int64_t w = 1;
    for (std::size_t k = 1; k < K.length(); ++k) w *= K.at(k) - 1;
    return w;
}

/// Number of leading parts summing to exactly p, when p is a prefix size.
inline std::optional<std::size_t> prefix_part_count(const Composition& K, Part p) {
    Part acc = 0;
    std::size_t count = 0;
    if (p == 0) return count;
    for (Part part : K.parts()) {
        acc += part;
        ++count;
        if (acc == p) return count;
        if (acc > p) return std::nullopt;
    }
    return std::nullopt;
}

/// { l in [6] : K has a prefix of size b+l }.
inline std::vector<int> prefix_L(const Composition& K, Part b) {
    std::vector<int> out;
    for (int l = 1; l <= 6; ++l) {
        if (has_prefix_of_size(K, b + l)) out.push_back(l);
    }
    return out;
}

/// { l in [3] : K has a suffix of size b+l }.
inline std::vector<int> suffix_L(const Composition& K, Part b) {
    std::vector<int> out;
    for (int l = 1; l <= 3; ++l) {
        if (has_suffix_of_size(K, b + l)) out.push_back(l);
    }
    return out;
}

}  // namespace csfkit

#endif
