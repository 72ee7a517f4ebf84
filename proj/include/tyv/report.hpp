#pragma once

// Relation verification reports: one row per (relation, index tuple),
// collected thread-safely and emitted as JSON lines.

#include <algorithm>
#include <chrono>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace tyv {

struct RelationReport {
    std::string suite;
    std::string relation;
    std::vector<int> indices;
    std::vector<int> exponents; // coefficient orders swept, when meaningful
    bool pass = false;
    std::string witness; // textual element/term, present only on failure
    long millis = 0;
};

inline nlohmann::json to_json(const RelationReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["relation"] = r.relation;
    j["indices"] = r.indices;
    j["exponents"] = r.exponents;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["witness"] = r.witness;
    j["millis"] = r.millis;
    return j;
}

class ReportSink {
public:
    void add(RelationReport row) {
        std::lock_guard lk(mutex_);
        rows_.push_back(std::move(row));
    }

    bool all_pass() const {
        std::lock_guard lk(mutex_);
        for (const auto& r : rows_) {
            if (!r.pass) return false;
        }
        return true;
    }

    std::size_t size() const {
        std::lock_guard lk(mutex_);
        return rows_.size();
    }

    std::size_t fail_count() const {
        std::lock_guard lk(mutex_);
        std::size_t n = 0;
        for (const auto& r : rows_) {
            if (!r.pass) ++n;
        }
        return n;
    }

    std::vector<RelationReport> sorted_rows() const {
        std::lock_guard lk(mutex_);
        std::vector<RelationReport> out = rows_;
        std::sort(out.begin(), out.end(), [](const RelationReport& a, const RelationReport& b) {
            if (a.suite != b.suite) return a.suite < b.suite;
            if (a.relation != b.relation) return a.relation < b.relation;
            if (a.indices != b.indices) return a.indices < b.indices;
            return a.exponents < b.exponents;
        });
        return out;
    }

    // Deterministic JSON-lines dump (sorted; timings are the only
    // run-dependent field).
    void write_json_lines(std::ostream& os) const {
        for (const auto& r : sorted_rows()) os << to_json(r).dump() << "\n";
    }

private:
    mutable std::mutex mutex_;
    std::vector<RelationReport> rows_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace tyv
