#ifndef CSFKIT_CERTIFICATE_HPP
#define CSFKIT_CERTIFICATE_HPP

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/expansion.hpp"

namespace csfkit {

/// One verified claim of a proof, with the compositions that violated it.
/// Failure messages are capped; the count is always exact.
struct StepRecord {
    static constexpr std::size_t kMaxStoredFailures = 12;

    std::string name;
    std::size_t checked = 0;
    std::size_t failure_total = 0;
    std::vector<std::string> failures;

    void pass() { ++checked; }

    void fail(const std::string& message) {
        ++checked;
        ++failure_total;
        if (failures.size() < kMaxStoredFailures) failures.push_back(message);
    }

    void require(bool ok, const std::string& message) {
        if (ok) pass(); else fail(message);
    }

    bool passed() const { return failure_total == 0; }
};

/// Machine-checkable outcome of running one of the proof certifiers.
struct CertificateReport {
    Part b = 0;
    std::string target;
    bool verified = false;
    // deque: step records keep their addresses while later steps are added
    std::deque<StepRecord> steps;
    std::optional<std::pair<Partition, Rational>> witness;

    StepRecord& step(const std::string& name) {
        steps.push_back(StepRecord{name, 0, 0, {}});
        return steps.back();
    }

    /// Sets `verified` from the step records; call once all steps ran.
    void finalize() {
        verified = true;
        for (const StepRecord& s : steps) {
            if (!s.passed()) verified = false;
        }
    }
};

}  // namespace csfkit

#endif
