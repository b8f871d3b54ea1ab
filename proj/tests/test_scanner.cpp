#include <doctest.h>

#include <sstream>

#include "dsieve/scanner.hpp"

using namespace dsieve;

TEST_SUITE("scanner") {

TEST_CASE("classify known numbers") {
    const ScanRecord r90 = classify(90);
    CHECK(r90.group_name == "Z2");
    CHECK(r90.mono_orbital);
    CHECK(r90.strong_conjecture_match == TriState::yes);
    CHECK(r90.weak_conjecture_holds);

    const ScanRecord r12 = classify(12);
    CHECK(r12.cyclotomic);
    CHECK(r12.strong_conjecture_match == TriState::not_applicable);
    CHECK(r12.group_order == 8);
    CHECK(r12.g1_generator == 6);

    const ScanRecord r16 = classify(16);
    CHECK(r16.group_order == 16);
    CHECK(r16.group_name == "nonabelian(16,4,4)");
    CHECK(r16.regime == "violated");  // mixed elements coexist with T_8 and f_9
    CHECK(r16.strong_conjecture_match == TriState::no);  // 4 | 16 but not a V

    const ScanRecord r120 = classify(120);
    CHECK(r120.group_name == "V");
    CHECK(r120.strong_conjecture_match == TriState::yes);
    CHECK(r120.regime == "direct_product");
}

TEST_CASE("scan_range shape") {
    CHECK(scan_range(10, 14).size() == 3);
    CHECK(scan_range(2, 8).size() == 4);
    CHECK(scan_range(100, 100).size() == 1);
    const std::vector<ScanRecord> rounded = scan_range(3, 13);  // 4..12
    CHECK(rounded.size() == 5);
    CHECK(rounded.front().n == 4);
    CHECK(rounded.back().n == 12);
    CHECK_THROWS_AS(scan_range(14, 10), std::invalid_argument);
}

TEST_CASE("scan order does not depend on workers") {
    const std::vector<ScanRecord> one = scan_range(4, 160, {1, false});
    const std::vector<ScanRecord> many = scan_range(4, 160, {3, false});
    REQUIRE(one.size() == many.size());
    std::ostringstream a, b;
    emit_report(one, ReportFormat::jsonl, a);
    emit_report(many, ReportFormat::jsonl, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("jsonl layout") {
    const std::vector<ScanRecord> records = scan_range(12, 16);
    std::ostringstream out;
    emit_report(records, ReportFormat::jsonl, out);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("{\"N\":", 0) == 0);  // field order starts with N
        ++count;
    }
    CHECK(count == 3);
    // a cyclotomic record carries a null strong-conjecture field
    CHECK(out.str().find("\"strong_conjecture_match\":null") != std::string::npos);
}

TEST_CASE("csv layout") {
    std::ostringstream out;
    emit_report({}, ReportFormat::csv, out);
    CHECK(out.str() ==
          "N,complement_size,cyclotomic,mono_orbital,qmo,g1_generator,h_order,group_order,"
          "group_name,regime,strong_conjecture_match,weak_conjecture_holds\n");

    std::ostringstream with_rows;
    emit_report(scan_range(16, 16), ReportFormat::csv, with_rows);
    // 16 is mono-orbital: the single non-dividing small prime is 3
    CHECK(with_rows.str().find(
              "16,4,false,true,true,8,4,16,nonabelian(16,4,4),violated,false,true") !=
          std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
    std::ostringstream a, b;
    emit_report(scan_range(4, 60), ReportFormat::jsonl, a);
    emit_report(scan_range(4, 60), ReportFormat::jsonl, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("weak conjecture holds through 600") {
    for (const ScanRecord& r : scan_range(4, 600)) {
        CHECK(r.weak_conjecture_holds);
        CHECK(r.complement_size > 0);
    }
}

TEST_CASE("write failures carry the path") {
    try {
        emit_report({}, ReportFormat::jsonl, std::string("/nonexistent-dir/report.jsonl"));
        FAIL("expected a write error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/report.jsonl") != std::string::npos);
    }
}

TEST_CASE("capacity errors skip the offending N") {
    const std::uint64_t over = (std::uint64_t{1} << 16) + 2;
    CHECK(scan_range(over, over).empty());
    ScanOptions abort_all;
    abort_all.abort_on_error = true;
    CHECK_THROWS_AS(scan_range(over, over, abort_all), CapacityError);
}

}  // TEST_SUITE
