#pragma once

// Batch classification over ranges of even N, with machine-readable JSONL
// and CSV reports.  Work is partitioned by N across workers; output order
// and byte layout are independent of the worker count.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsieve/symmetry.hpp"

namespace dsieve {

// Tri-state: the strong conjecture only speaks about non-cyclotomic N.
enum class TriState { no, yes, not_applicable };

struct ScanRecord {
    std::uint64_t n = 0;
    std::uint64_t complement_size = 0;
    bool cyclotomic = false;
    bool mono_orbital = false;
    bool qmo = false;
    std::uint64_t g1_generator = 0;  // 0 when the translation part is trivial
    std::uint64_t h_order = 0;
    std::uint64_t group_order = 0;
    std::string group_name;
    std::string regime;
    TriState strong_conjecture_match = TriState::not_applicable;
    bool weak_conjecture_holds = false;
};

ScanRecord classify(std::uint64_t n);

struct ScanOptions {
    unsigned jobs = 0;        // 0: use hardware concurrency
    bool abort_on_error = false;
};

// Records for every even N in [from, to], ascending.  A capacity error on
// one N is logged and skipped unless abort_on_error is set.
std::vector<ScanRecord> scan_range(std::uint64_t from, std::uint64_t to,
                                   const ScanOptions& options = {});

enum class ReportFormat { jsonl, csv };

void emit_report(const std::vector<ScanRecord>& records, ReportFormat format,
                 std::ostream& out);
void emit_report(const std::vector<ScanRecord>& records, ReportFormat format,
                 const std::string& path);

}  // namespace dsieve
