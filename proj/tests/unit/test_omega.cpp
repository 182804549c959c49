#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>
#include <gronwall/criteria.hpp>
#include <gronwall/errors.hpp>
#include <gronwall/omega.hpp>
#include <gronwall/render.hpp>
#include <gronwall/sa.hpp>
#include <gronwall/table_reference.hpp>
#include <json.hpp>

using namespace gw;

namespace {

const SAList& full_records() {
  static SAList list = sa_list(370.0);
  return list;
}

RecordProvider provider() {
  return [](double bound) -> const SAList& {
    REQUIRE(bound <= 370.0);
    return full_records();
  };
}

}  // namespace

TEST_SUITE("omega") {

TEST_CASE("class_abundancy_max is the exact class-wide bound") {
  // Omega = 9: the greedy multiplier product lands on 2^3*3^2*5*7*11*13.
  CHECK(class_abundancy_max(9) ==
        FactoredInteger::parse("2^3*3^2*5*7*11*13").sigma_over_n());
  // Omega = 1: a single factor of 2 maximizes sigma(n)/n.
  CHECK(class_abundancy_max(1) == mpq_class(3, 2));
  CHECK(class_abundancy_max(2) == FactoredInteger::parse("2*3").sigma_over_n());

  // It dominates sigma/n of every class member we can easily enumerate.
  DecisionConfig cfg;
  for (std::uint64_t w = 9; w <= 12; ++w) {
    auto cap = class_abundancy_max(w);
    for (const auto& rec : sa_list(40.0).records)
      if (rec.n.big_omega() == w) CHECK(rec.abundancy <= cap);
  }
}

TEST_CASE("gmax_over_sa reproduces the anchor rows") {
  DecisionConfig cfg;
  auto row9 = gmax_over_sa(9, full_records(), cfg);
  CHECK(row9.n_star.format() == "2^5*3^2*5*7");
  CHECK(row9.sa_index == 20);
  CHECK(row9.p_omega == 11);
  CHECK_FALSE(row9.ineq4);
  CHECK(half_up_tenths(row9.log_n_star.midpoint_double()) == 92);

  auto row14 = gmax_over_sa(14, full_records(), cfg);
  CHECK(row14.n_star.format() == "2^5*3^3*5^2*7*11*13*17");
  CHECK(row14.sa_index == 46);
  CHECK(row14.p_omega == 19);
  CHECK(row14.ineq4);
  CHECK(half_up_tenths(row14.log_n_star.midpoint_double()) == 197);

  auto row43 = gmax_over_sa(43, full_records(), cfg);
  CHECK(row43.sa_index == 317);
  CHECK(row43.p_omega == 107);
  CHECK(row43.ineq4);
  CHECK(half_up_tenths(row43.log_n_star.midpoint_double()) == 1124);

  auto row90 = gmax_over_sa(90, full_records(), cfg);
  CHECK(row90.sa_index == 972);
  CHECK(row90.p_omega == 331);
  CHECK(row90.ineq4);
  CHECK(half_up_tenths(row90.log_n_star.midpoint_double()) == 3343);
}

TEST_CASE("G and log anchors across the table") {
  DecisionConfig cfg;
  auto g_of = [&](const OmegaRow& row) {
    return g_value(row.n_star, 128).midpoint_double();
  };
  auto row9 = gmax_over_sa(9, full_records(), cfg);
  CHECK(g_of(row9) == doctest::Approx(1.7558143).epsilon(1e-6));
  CHECK(row9.log_n_star.midpoint_double() ==
        doctest::Approx(9.2183).epsilon(1e-4));
  auto row14 = gmax_over_sa(14, full_records(), cfg);
  CHECK(g_of(row14) == doctest::Approx(1.7243490).epsilon(1e-6));
  CHECK(row14.log_n_star.midpoint_double() ==
        doctest::Approx(19.7224).epsilon(1e-4));
  auto row43 = gmax_over_sa(43, full_records(), cfg);
  CHECK(g_of(row43) == doctest::Approx(1.7527460).epsilon(1e-6));
  CHECK(row43.log_n_star.midpoint_double() ==
        doctest::Approx(112.3523).epsilon(1e-4));
  auto row90 = gmax_over_sa(90, full_records(), cfg);
  CHECK(g_of(row90) == doctest::Approx(1.7681396).epsilon(1e-6));
  CHECK(row90.log_n_star.midpoint_double() ==
        doctest::Approx(334.3243).epsilon(1e-4));
}

TEST_CASE("gmax_over_sa error taxonomy") {
  DecisionConfig cfg;
  CHECK_THROWS_AS(gmax_over_sa(8, full_records(), cfg), DomainError);
  // Records up to e^5: nothing with 9 factors.
  auto tiny = sa_list(5.0);
  CHECK_THROWS_AS(gmax_over_sa(9, tiny, cfg), EmptyClass);
  // Records up to e^10 contain 10080 but the bound cannot certify the
  // class-wide maximum: 4.3636/ln(10) ~ 1.895 > G(10080).
  auto low = sa_list(10.0);
  CHECK_THROWS_AS(gmax_over_sa(9, low, cfg), CoverageError);
  // At e^25 the certificate closes: 4.3636/ln(25) ~ 1.356 < G(10080).
  auto ok = sa_list(25.0);
  CHECK(gmax_over_sa(9, ok, cfg).n_star.format() == "2^5*3^2*5*7");
}

TEST_CASE("gmax_bruteforce agrees with the record search") {
  DecisionConfig cfg;
  auto row9 = gmax_bruteforce(9, cfg, &full_records());
  CHECK(row9.n_star.format() == "2^5*3^2*5*7");
  CHECK(row9.sa_index == 20);
  auto row10 = gmax_bruteforce(10, cfg, &full_records());
  CHECK(row10.n_star.format() == "2^5*3^2*5*7*11");

  for (std::uint64_t w = 9; w <= 30; ++w) {
    auto brute = gmax_bruteforce(w, cfg, nullptr);
    auto scanned = gmax_over_sa(w, full_records(), cfg);
    CHECK(brute.n_star == scanned.n_star);
    CHECK(brute.p_omega == scanned.p_omega);
    CHECK(brute.ineq4 == scanned.ineq4);
  }
}

TEST_CASE("gmax_bruteforce consumes exactly the partition count") {
  DecisionConfig cfg;
  std::uint64_t count = 0;
  gmax_bruteforce(30, cfg, nullptr, 40, &count);
  CHECK(count == 5604);
  gmax_bruteforce(40, cfg, nullptr, 40, &count);
  CHECK(count == 37338);
  gmax_bruteforce(9, cfg, nullptr, 40, &count);
  CHECK(count == 30);  // p(9)
}

TEST_CASE("gmax_bruteforce cap and domain") {
  DecisionConfig cfg;
  CHECK_THROWS_AS(gmax_bruteforce(41, cfg, nullptr, 40), DomainError);
  CHECK_THROWS_AS(gmax_bruteforce(1, cfg), DomainError);
  CHECK_NOTHROW(gmax_bruteforce(41, cfg, nullptr, 41));
}

TEST_CASE("inequality-4 column re-decision") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 90, cfg, provider());
  for (const auto& row : rows)
    CHECK(prime_below_log(row, cfg) == row.ineq4);
  // Spot values fixed by the reference table.
  CHECK_FALSE(rows[0].ineq4);                 // omega 9
  CHECK(rows[36 - 9].ineq4);                  // omega 36
  CHECK_FALSE(rows[66 - 9].ineq4);            // omega 66: 223 > 218.8
  CHECK(rows[74 - 9].ineq4);                  // omega 74
  CHECK(rows[74 - 9].n_star.exponent(3) == 4);  // exponent of 5 rises to 4
  CHECK_FALSE(rows[50 - 9].ineq4);            // omega 50
  CHECK(rows[50 - 9].p_omega == 149);
  CHECK(half_up_tenths(rows[50 - 9].log_n_star.midpoint_double()) == 1460);
}

TEST_CASE("row invariants hold for every table row") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 90, cfg, provider());
  REQUIRE(rows.size() == 82);
  for (const auto& row : rows) {
    CHECK(row.n_star.big_omega() == row.omega);
    CHECK(row.n_star.least_missing_prime() == row.p_omega);
    CHECK(row.n_star.is_nonincreasing());
    CHECK(row.sa_index >= 20);
  }
}

TEST_CASE("full table matches the corrected reference") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 90, cfg, provider());
  auto mismatches = reference::compare(rows, reference::Edition::Corrected);
  for (const auto& m : mismatches) {
    CAPTURE(m.omega);
    CAPTURE(m.column);
    CAPTURE(m.expected);
    CAPTURE(m.actual);
    CHECK(false);
  }
  CHECK(mismatches.empty());
}

TEST_CASE("printed edition differs in exactly the seven known rows") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 90, cfg, provider());
  auto mismatches = reference::compare(rows, reference::Edition::Printed);
  std::set<std::uint64_t> omegas;
  for (const auto& m : mismatches) omegas.insert(m.omega);
  CHECK(omegas == std::set<std::uint64_t>({25, 43, 56, 58, 60, 62, 88}));
}

TEST_CASE("table range validation") {
  DecisionConfig cfg;
  CHECK_THROWS_AS(table_rows(10, 9, cfg, provider()), DomainError);
  CHECK_THROWS_AS(table_rows(8, 12, cfg, provider()), DomainError);
  CHECK_THROWS_AS(table_rows(89, 91, cfg, provider()), DomainError);
  CHECK_NOTHROW(table_rows(89, 91, cfg, provider(), false));
}

TEST_CASE("reference lookup") {
  CHECK(reference::rows(reference::Edition::Corrected).size() == 82);
  CHECK(reference::rows(reference::Edition::Printed).size() == 82);
  auto* row = reference::find_row(9, reference::Edition::Corrected);
  REQUIRE(row != nullptr);
  CHECK(row->sa_index == 20);
  CHECK(reference::find_row(8, reference::Edition::Corrected) == nullptr);
  CHECK(reference::find_row(91, reference::Edition::Printed) == nullptr);

  // The known errata, spelled out.
  auto corrected = [](std::uint64_t w) {
    return *reference::find_row(w, reference::Edition::Corrected);
  };
  auto printed = [](std::uint64_t w) {
    return *reference::find_row(w, reference::Edition::Printed);
  };
  CHECK(corrected(25).log_tenths == 513);
  CHECK(printed(25).log_tenths == 512);
  CHECK(corrected(58).sa_index == 502);
  CHECK(printed(58).sa_index == 518);
  CHECK(corrected(60).sa_index == 537);
  CHECK(printed(60).sa_index == 554);
  CHECK(corrected(88).sa_index == 956);
  CHECK(printed(88).sa_index == 942);
  CHECK(corrected(56).log_tenths == 1688);
  CHECK(printed(56).log_tenths == 1689);
  CHECK(corrected(62).log_tenths == 1976);
  CHECK(printed(62).log_tenths == 1978);
  CHECK(std::string(corrected(43).factorization) !=
        std::string(printed(43).factorization));
}

TEST_CASE("chain check over the full reproduction") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 91, cfg, provider(), false);
  auto report = chain_check(rows, cfg);
  CHECK(report.violations.empty());
  CHECK(report.ticked > 0);
  CHECK(report.links_checked == 2 * report.ticked - report.skipped);
  // skipped counts only a ticked final row lacking a successor.
  CHECK(report.skipped == (rows.back().ineq4 ? 1 : 0));

  // Ticked rows must show a strict G_max increase (the chain's two links
  // compose into a strict inequality).
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!rows[i].ineq4) continue;
    CHECK(decide_less(g_producer(rows[i].n_star),
                      g_producer(rows[i + 1].n_star), cfg));
  }
}

TEST_CASE("chain check demands consecutive rows") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 12, cfg, provider());
  rows.erase(rows.begin() + 1);
  CHECK_THROWS_AS(chain_check(rows, cfg), DomainError);
}

TEST_CASE("markdown rendering of the leading rows") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 14, cfg, provider());
  auto md = to_markdown(rows);
  CHECK(std::count(md.begin(), md.end(), '\n') >= 6);
  // Exactly one checkmark: omega 14.
  std::size_t count = 0;
  for (std::size_t pos = md.find("\xE2\x9C\x93"); pos != std::string::npos;
       pos = md.find("\xE2\x9C\x93", pos + 1))
    ++count;
  CHECK(count == 1);
  CHECK(md.find("2^5*3^3*5^2*7*...*17") != std::string::npos);
}

TEST_CASE("golden CSV bytes for omega 9..10") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 10, cfg, provider());
  CHECK(to_csv(rows) ==
        "omega,factorization,sa_index,log_n,p_omega,ineq4\n"
        "9,2^5*3^2*5*7,20,9.2,11,false\n"
        "10,2^5*3^2*5*7*11,25,11.6,13,false\n");
  // Determinism: rendering twice yields identical bytes.
  CHECK(to_csv(rows) == to_csv(rows));
  CHECK(to_json(rows) == to_json(rows));
  CHECK(to_markdown(rows) == to_markdown(rows));
}

TEST_CASE("rows survive serialization with invariants intact") {
  DecisionConfig cfg;
  auto rows = table_rows(9, 20, cfg, provider());
  auto parsed = nlohmann::json::parse(to_json(rows));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& j = parsed[i];
    auto n = FactoredInteger::parse(j["factorization"].get<std::string>());
    CHECK(n.big_omega() == j["omega"].get<std::uint64_t>());
    CHECK(n.least_missing_prime() == j["p_omega"].get<std::uint64_t>());
    OmegaRow rebuilt;
    rebuilt.omega = j["omega"].get<std::uint64_t>();
    rebuilt.n_star = n;
    rebuilt.sa_index = j["sa_index"].get<std::uint64_t>();
    rebuilt.log_n_star = log_n(n, 128);
    rebuilt.p_omega = j["p_omega"].get<std::uint64_t>();
    rebuilt.ineq4 = j["ineq4"].get<bool>();
    CHECK(prime_below_log(rebuilt, cfg) == rebuilt.ineq4);
    CHECK(rebuilt.log_n_star.midpoint_double() ==
          doctest::Approx(std::stod(j["log_n"].get<std::string>()))
              .epsilon(1e-9));
  }
}

TEST_CASE("sa record rendering") {
  auto list = sa_list(std::log(200.0));
  auto csv = to_csv(list.records);
  CHECK(csv.rfind("index,factorization,abundancy,log_n", 0) == 0);
  CHECK(csv.find("1,1,1/1,0.000000000000\n") != std::string::npos);
  auto js = nlohmann::json::parse(to_json(list.records));
  REQUIRE(js.is_array());
  CHECK(js.size() == list.records.size());
  CHECK(js[5]["factorization"].get<std::string>() ==
        list.records[5].n.format());
  auto md = to_markdown(list.records);
  CHECK(md.find("| index |") != std::string::npos);
}

TEST_CASE("half-up tenths") {
  CHECK(half_up_tenths(9.218) == 92);
  CHECK(half_up_tenths(51.25) == 513);   // half rounds up
  CHECK(half_up_tenths(51.2499) == 512);
  CHECK(half_up_tenths(0.0) == 0);
  CHECK(one_decimal(513) == "51.3");
  CHECK(one_decimal(92) == "9.2");
  CHECK(one_decimal(0) == "0.0");
}

}  // TEST_SUITE
