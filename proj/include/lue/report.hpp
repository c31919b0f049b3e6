#ifndef LUE_REPORT_HPP
#define LUE_REPORT_HPP

#include <string>
#include <vector>

#include "lue/real.hpp"

namespace lue {

// One verified identity instance at a grid point.
struct IdentityRecord {
    std::string id;     // paper-facing label, e.g. "2.13"
    int n = 0;
    std::string alpha;
    std::string s;
    Real residual;
    Real tol;
    bool pass = false;
    std::string note;
};

struct IdentityReport {
    std::string suite;
    std::vector<IdentityRecord> records;

    void add(const std::string& id, int n, const Real& alpha, const Real& s,
             const Real& residual, const Real& tol, const std::string& note = "") {
        records.push_back({id, n, alpha.str(17), s.str(17), residual, tol,
                           abs(residual) <= tol, note});
    }
    void merge(const IdentityReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    Real max_residual() const {
        Real m = Real::of(0L, 64);
        for (const auto& r : records) m = max(m, abs(r.residual));
        return m;
    }
    std::vector<IdentityRecord> failures() const {
        std::vector<IdentityRecord> out;
        for (const auto& r : records)
            if (!r.pass) out.push_back(r);
        return out;
    }
};

} // namespace lue

#endif
