#include "dsieve/scanner.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dsieve/criteria.hpp"

namespace dsieve {

ScanRecord classify(std::uint64_t n) {
    const GoldbachSieve sieve = build_sieve(n);
    const SymmetryGroup group = compute_symmetry_group(sieve);
    const StructureReport structure = decompose(group);
    const NClassification cls = orbit_classification(n);

    ScanRecord r;
    r.n = n;
    r.complement_size = sieve.complement.size();
    r.cyclotomic = cls.cyclotomic;
    r.mono_orbital = cls.mono_orbital;
    r.qmo = cls.qmo;
    r.g1_generator = group.g1_generator;
    r.h_order = group.unit_part.size();
    r.group_order = group.elements.size();
    r.group_name = group.descriptor.name;
    r.regime = regime_name(structure.regime);
    if (cls.cyclotomic) {
        r.strong_conjecture_match = TriState::not_applicable;
    } else {
        const bool match = n % 4 == 0 ? r.group_name == "V" : r.group_name == "Z2";
        r.strong_conjecture_match = match ? TriState::yes : TriState::no;
    }
    r.weak_conjecture_holds = r.group_order < n * euler_phi(n);
    return r;
}

std::vector<ScanRecord> scan_range(std::uint64_t from, std::uint64_t to,
                                   const ScanOptions& options) {
    if (from % 2 != 0) ++from;       // round inward to even
    if (to % 2 != 0) --to;
    if (from < 2 || from > to) throw std::invalid_argument("scan_range: empty range");

    const std::size_t count = (to - from) / 2 + 1;
    std::vector<ScanRecord> records(count);
    std::vector<std::uint8_t> ok(count, 0);

    unsigned jobs = options.jobs != 0 ? options.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> fail{false};
    std::string first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || fail.load()) return;
            const std::uint64_t n = from + 2 * i;
            try {
                records[i] = classify(n);
                ok[i] = 1;
            } catch (const CapacityError& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                std::cerr << "scan: N=" << n << " skipped: " << e.what() << "\n";
                if (options.abort_on_error) {
                    first_error = e.what();
                    fail.store(true);
                }
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (fail.load()) throw CapacityError("scan_range aborted: " + first_error);

    std::vector<ScanRecord> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        if (ok[i]) out.push_back(std::move(records[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Reports

static const char* const kCsvHeader =
    "N,complement_size,cyclotomic,mono_orbital,qmo,g1_generator,h_order,group_order,"
    "group_name,regime,strong_conjecture_match,weak_conjecture_holds";

static std::string tri_state_csv(TriState t) {
    switch (t) {
        case TriState::yes: return "true";
        case TriState::no: return "false";
        case TriState::not_applicable: return "na";
    }
    return "na";
}

void emit_report(const std::vector<ScanRecord>& records, ReportFormat format,
                 std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << kCsvHeader << "\n";
        for (const ScanRecord& r : records) {
            out << r.n << ',' << r.complement_size << ',' << (r.cyclotomic ? "true" : "false")
                << ',' << (r.mono_orbital ? "true" : "false") << ',' << (r.qmo ? "true" : "false")
                << ',' << r.g1_generator << ',' << r.h_order << ',' << r.group_order << ','
                << r.group_name << ',' << r.regime << ',' << tri_state_csv(r.strong_conjecture_match)
                << ',' << (r.weak_conjecture_holds ? "true" : "false") << "\n";
        }
        return;
    }
    for (const ScanRecord& r : records) {
        nlohmann::ordered_json j;
        j["N"] = r.n;
        j["complement_size"] = r.complement_size;
        j["cyclotomic"] = r.cyclotomic;
        j["mono_orbital"] = r.mono_orbital;
        j["qmo"] = r.qmo;
        j["g1_generator"] = r.g1_generator;
        j["h_order"] = r.h_order;
        j["group_order"] = r.group_order;
        j["group_name"] = r.group_name;
        j["regime"] = r.regime;
        if (r.strong_conjecture_match == TriState::not_applicable)
            j["strong_conjecture_match"] = nullptr;
        else
            j["strong_conjecture_match"] = r.strong_conjecture_match == TriState::yes;
        j["weak_conjecture_holds"] = r.weak_conjecture_holds;
        out << j.dump() << "\n";
    }
}

void emit_report(const std::vector<ScanRecord>& records, ReportFormat format,
                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open " + path);
    emit_report(records, format, out);
    if (!out.good()) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace dsieve
