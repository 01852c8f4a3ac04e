#ifndef SMCKIT_COMMON_HPP
#define SMCKIT_COMMON_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace smck {

using ObjId = int;
using ArrId = int;

/// Thrown on precondition violations (non-composable pair, endpoint
/// mismatch, dangling id in a constructor) and on resource-cap overruns.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CapError : public Error {
public:
    explicit CapError(const std::string& msg) : Error(msg) {}
};

/// One violated law. `structural` marks malformed-table findings as
/// opposed to a well-formed structure failing an axiom.
struct Violation {
    std::string law;
    std::string detail;
    bool structural = false;
};

using Report = std::vector<Violation>;

inline void add(Report& r, const std::string& law, const std::string& detail,
                bool structural = false) {
    r.push_back(Violation{law, detail, structural});
}

inline bool mentions(const Report& r, const std::string& law) {
    for (const auto& v : r)
        if (v.law == law) return true;
    return false;
}

inline std::string report_to_string(const Report& r) {
    std::ostringstream os;
    for (const auto& v : r)
        os << (v.structural ? "[structural] " : "[law] ") << v.law << ": "
           << v.detail << "\n";
    return os.str();
}

template <typename... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

} // namespace smck

#endif
