#include "qaw/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qaw {

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json p;
    for (auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["mode"] = r.mode;
    j["residual"] = r.residual;
    j["pass"] = r.pass;
    j["notes"] = r.notes;
    return j.dump();
}

void write_json_lines(std::ostream& os, const std::string& suite,
                      const std::vector<VerificationReport>& records) {
    nlohmann::ordered_json header;
    header["suite"] = suite;
    header["records"] = records.size();
    std::size_t failed = 0;
    for (auto& r : records)
        if (!r.pass) ++failed;
    header["failed"] = failed;
    os << header.dump() << "\n";
    for (auto& r : records) os << report_json(r) << "\n";
}

void write_csv(std::ostream& os, const std::vector<VerificationReport>& records) {
    os << "id,params,mode,residual,pass,notes\n";
    auto esc = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        return out + "\"";
    };
    for (auto& r : records) {
        std::ostringstream ps;
        bool first = true;
        for (auto& [k, v] : r.params) {
            if (!first) ps << " ";
            first = false;
            ps << k << "=" << v;
        }
        os << esc(r.id) << "," << esc(ps.str()) << "," << r.mode << "," << r.residual << ","
           << (r.pass ? "true" : "false") << "," << esc(r.notes) << "\n";
    }
}

int suite_exit_code(const std::vector<VerificationReport>& records) {
    for (auto& r : records)
        if (!r.pass) return 1;
    return 0;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f, int jobs) {
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    workers = std::min<unsigned>(workers, n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace qaw
