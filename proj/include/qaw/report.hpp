#pragma once

// Structured verification records and machine-readable report output
// (JSON lines plus a CSV summary), shared by every suite.

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qaw {

struct VerificationReport {
    std::string id;
    std::map<std::string, std::string> params;
    std::string mode;  // "exact" | "float"
    double residual = 0.0;
    bool pass = false;
    std::string notes;
};

std::string report_json(const VerificationReport& r);
void write_json_lines(std::ostream& os, const std::string& suite,
                      const std::vector<VerificationReport>& records);
void write_csv(std::ostream& os, const std::vector<VerificationReport>& records);

// 0 if every record passes, 1 otherwise (the CLI exit contract)
int suite_exit_code(const std::vector<VerificationReport>& records);

// Deterministic fan-out: f(i) runs on a small pool, results land in order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f, int jobs = 0);

}  // namespace qaw
