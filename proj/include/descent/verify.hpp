#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

enum class VerificationStatus : std::uint8_t { Pass, Fail, Error };

std::string status_name(VerificationStatus s);

struct Counterexample {
    std::string key;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    int n = 0;
    /// Number of variables per alphabet for polynomial identities, 0 otherwise.
    int alphabet_size = 0;
    VerificationStatus status = VerificationStatus::Pass;
    std::optional<Counterexample> counterexample;  // set when status is Fail
    std::string error;                             // set when status is Error
    std::int64_t checked = 0;                      // number of exact comparisons made
    double wall_time_ms = 0.0;
};

/// Raised for an unknown identity id or an n outside the identity's range.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    int min_n = 1;
    int default_n = 1;
    int max_n = 1;
    std::function<int(int)> alphabet_size;
};

/// All identities in a fixed order.
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& find_identity(const std::string& id);

/// Runs both sides of one identity at rank n and compares them exactly.
/// Throws usage_error for an unknown id or out-of-range n; any other exception
/// inside the run is reported with status Error.
VerificationReport verify_identity(const std::string& id, int n);

/// verify_identity for n = min_n..max_n of each (id, max_n) request, identities
/// run on up to `workers` threads. The result is ordered by request, then n.
/// Range problems are reported as Error entries rather than thrown.
std::vector<VerificationReport> verify_many(const std::vector<std::pair<std::string, int>>& requests,
                                            unsigned workers);

}  // namespace descent
