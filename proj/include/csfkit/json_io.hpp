#ifndef CSFKIT_JSON_IO_HPP
#define CSFKIT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "csfkit/certificate.hpp"
#include "csfkit/expansion.hpp"

namespace csfkit {

using json = nlohmann::ordered_json;

namespace detail {
inline const char* indexing_name(const Partition*) { return "partition"; }
inline const char* indexing_name(const Composition*) { return "composition"; }
}  // namespace detail

/// {"degree": n, "basis": "e", "indexing": ..., "terms": [{"index": [...], "coeff": "p/q"}]}
/// Terms in graded reverse-lexicographic order; coefficients as "num/den".
template <typename Key>
json expansion_to_json(const Expansion<Key>& f) {
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        json term;
        term["index"] = it->first.parts();
        term["coeff"] = to_fraction_string(it->second);
        terms.push_back(std::move(term));
    }
    json out;
    out["degree"] = f.degree();
    out["basis"] = "e";
    out["indexing"] = detail::indexing_name(static_cast<const Key*>(nullptr));
    out["terms"] = std::move(terms);
    return out;
}

inline json witness_to_json(const std::optional<std::pair<Partition, Rational>>& w) {
    if (!w) return nullptr;
    json out;
    out["index"] = w->first.parts();
    out["coeff"] = to_fraction_string(w->second);
    return out;
}

inline json report_to_json(const CertificateReport& report) {
    json steps = json::array();
    for (const StepRecord& s : report.steps) {
        json step;
        step["name"] = s.name;
        step["checked"] = s.checked;
        step["failures"] = s.failures;
        steps.push_back(std::move(step));
    }
    json out;
    out["b"] = report.b;
    out["target"] = report.target;
    out["verified"] = report.verified;
    out["steps"] = std::move(steps);
    out["witness"] = witness_to_json(report.witness);
    return out;
}

}  // namespace csfkit

#endif
