#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "schurlab/bounds.hpp"
#include "schurlab/catalog.hpp"
#include "schurlab/log.hpp"
#include "schurlab/multiplier.hpp"

namespace schurlab {

namespace {

SweepRow evaluate(const CatalogEntry& entry) {
    SweepRow row;
    row.name = entry.name;
    const SeriesReport info = series(entry.algebra);
    row.n = info.n;
    row.m = info.derived_dim;
    row.c = info.nilpotency_class;
    row.dim_M = schur_multiplier_dim(entry.algebra);
    if (row.m > 0) {
        row.bound_e2 = bound_e2(row.n, row.m, row.c);
        row.attains_e2 = static_cast<long long>(row.dim_M) == *row.bound_e2;
    }
    return row;
}

std::vector<SweepRow> evaluate_all(const std::vector<CatalogEntry>& entries, bool parallel) {
    std::vector<SweepRow> rows(entries.size());
    if (!parallel || entries.size() < 2) {
        for (std::size_t i = 0; i < entries.size(); ++i) rows[i] = evaluate(entries[i]);
        return rows;
    }
    const std::size_t workers =
        std::min<std::size_t>(entries.size(), std::max(2u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(entries.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < entries.size(); i = next++) {
                try {
                    rows[i] = evaluate(entries[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

} // namespace

SweepReport classification_sweep(std::size_t max_dim, bool parallel) {
    SweepReport report;
    report.max_dim = max_dim;
    const auto entries = enumerate(max_dim);
    log_info("sweep: " + std::to_string(entries.size()) + " entries up to dimension " + std::to_string(max_dim));
    report.rows = evaluate_all(entries, parallel);

    for (std::size_t k = 0; 3 + k <= max_dim; ++k) report.expected_attainers.push_back(k == 0 ? "H1" : "H1+A" + std::to_string(k));
    if (max_dim >= 5) report.expected_attainers.push_back("L5_8");
    if (max_dim >= 6) report.expected_attainers.push_back("L6_26");

    report.refined_bound_holds = true;
    report.corank_two_never_attains = true;
    for (const auto& row : report.rows) {
        if (row.attains_e2) report.attainers.push_back(row.name);
        if (row.c >= 3 && row.bound_e2) {
            const long long dim = static_cast<long long>(row.dim_M);
            if (dim > *row.bound_e2 - 1) {
                report.refined_bound_holds = false;
                report.failures.push_back(row.name + ": class " + std::to_string(row.c) + " but dim M = " +
                                          std::to_string(dim) + " > bound_e2 - 1 = " + std::to_string(*row.bound_e2 - 1));
            } else if (dim == *row.bound_e2 - 1) {
                report.refined_bound_equality.push_back(row.name);
            }
        }
        if (row.n >= 4 && row.m + 2 == row.n && row.attains_e2) {
            report.corank_two_never_attains = false;
            report.failures.push_back(row.name + ": m = n - 2 and attains bound_e2");
        }
    }

    const std::set<std::string> got(report.attainers.begin(), report.attainers.end());
    const std::set<std::string> want(report.expected_attainers.begin(), report.expected_attainers.end());
    report.attainers_match = got == want;
    for (const auto& name : got)
        if (!want.count(name)) report.failures.push_back(name + ": unexpected attainer");
    for (const auto& name : want)
        if (!got.count(name)) report.failures.push_back(name + ": expected attainer not found");
    return report;
}

} // namespace schurlab
