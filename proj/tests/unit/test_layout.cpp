#include <doctest.h>

#include <string>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/layout.hpp"

using namespace qwalk;

namespace {

const CoinTable kTable;

bool is_h(const CoinLayout& layout, long x) { return coin_at(layout, kTable, x) == hadamard(); }
bool is_i(const CoinLayout& layout, long x) { return coin_at(layout, kTable, x) == identity_coin(); }

long residue(long x, long n) { return ((x % n) + n) % n; }

bool same_sites(const CoinLayout& a, const CoinTable& ta, const CoinLayout& b, const CoinTable& tb, long radius) {
    for (long x = -radius; x <= radius; ++x) {
        if (!(coin_at(a, ta, x) == coin_at(b, tb, x))) {
            return false;
        }
    }
    return true;
}

std::string validation_message(CaseSpec spec) {
    try {
        validate(spec);
    } catch (const DomainError& e) {
        return e.what();
    }
    return {};
}

// Every valid (family, parameter) combination with parameter <= 21.
std::vector<CaseSpec> all_small_specs() {
    std::vector<CaseSpec> specs;
    for (CaseFamily f : {CaseFamily::IA, CaseFamily::IB, CaseFamily::IIA, CaseFamily::IIB, CaseFamily::IIIA,
                         CaseFamily::IIIB}) {
        for (int n = 1; n <= 21; ++n) {
            try {
                validate(CaseSpec{f, n});
                specs.push_back(CaseSpec{f, n});
            } catch (const DomainError&) {
            }
        }
    }
    return specs;
}

CaseFamily dual_of(CaseFamily f) {
    switch (f) {
    case CaseFamily::IA: return CaseFamily::IB;
    case CaseFamily::IB: return CaseFamily::IA;
    case CaseFamily::IIA: return CaseFamily::IIB;
    case CaseFamily::IIB: return CaseFamily::IIA;
    case CaseFamily::IIIA: return CaseFamily::IIIB;
    case CaseFamily::IIIB: return CaseFamily::IIIA;
    }
    return f;
}

} // namespace

TEST_CASE("case IA N=14: H exactly at multiples of N") {
    const CoinLayout layout = case_layout({CaseFamily::IA, 14});
    CHECK(layout.period() == 14);
    CHECK(is_h(layout, 0));
    CHECK(is_h(layout, 14));
    CHECK(is_h(layout, -14));
    CHECK(is_h(layout, -28));
    CHECK(is_i(layout, 1));
    CHECK(is_i(layout, -1));
    CHECK(is_i(layout, 13));
}

TEST_CASE("case IIA N=14: I at x = N/2 mod N") {
    const CoinLayout layout = case_layout({CaseFamily::IIA, 14});
    CHECK(is_i(layout, 7));
    CHECK(is_i(layout, -7));
    CHECK(is_i(layout, 21));
    CHECK(is_h(layout, 0));
    CHECK(is_h(layout, 6));
    CHECK(is_h(layout, -6));
}

TEST_CASE("case IB N=3: I at multiples of 3, H elsewhere") {
    const CoinLayout layout = case_layout({CaseFamily::IB, 3});
    for (long x = -30; x <= 30; ++x) {
        CHECK(is_i(layout, x) == (residue(x, 3) == 0));
        CHECK(is_h(layout, x) == (residue(x, 3) != 0));
    }
}

TEST_CASE("case IIIB q=7: I on the centered block and its 14-translates") {
    const CoinLayout layout = case_layout({CaseFamily::IIIB, 7});
    CHECK(layout.period() == 14);
    for (long x = -3; x <= 3; ++x) {
        CHECK(is_i(layout, x));
        CHECK(is_i(layout, x + 14));
        CHECK(is_i(layout, x - 28));
    }
    for (long x = 4; x <= 10; ++x) {
        CHECK(is_h(layout, x));
        CHECK(is_h(layout, -x));
    }
}

TEST_CASE("case IIIA q=3 matches enumerated mod-6 residues") {
    // Centered block {-1, 0, 1} mod 6 -> residues {5, 0, 1} use H; {2, 3, 4} use I.
    const CoinLayout layout = case_layout({CaseFamily::IIIA, 3});
    for (long x = -60; x <= 60; ++x) {
        const long r = residue(x, 6);
        const bool expect_h = r == 5 || r == 0 || r == 1;
        CHECK(is_h(layout, x) == expect_h);
        CHECK(is_i(layout, x) == !expect_h);
    }
}

TEST_CASE("degenerate and explicit patterns") {
    const CoinLayout all_h = layout_from_pattern({kCp}, 0);
    const CoinLayout all_i = layout_from_pattern({kC0}, 0);
    for (long x = -50; x <= 50; ++x) {
        CHECK(is_h(all_h, x));
        CHECK(is_i(all_i, x));
    }
    CHECK(same_sites(layout_from_pattern({kCp, kC0, kC0}, 0), kTable, case_layout({CaseFamily::IA, 3}), kTable, 20));
    CHECK_THROWS_AS(layout_from_pattern({}, 0), DomainError);

    const CoinLayout shifted = layout_from_pattern({kCp, kC0, kC0}, -1);
    CHECK(shifted.anchor() == 2);
    CHECK(shifted.id_at(1) == kCp);
    CHECK(layout_from_pattern({kCp, kC0, kC0}, 3001).anchor() == 1);
}

TEST_CASE("case validation names the violated constraint") {
    CHECK(validation_message({CaseFamily::IA, 1}).find("N >= 2") != std::string::npos);
    CHECK(validation_message({CaseFamily::IIA, 3}).find("even") != std::string::npos);
    CHECK(validation_message({CaseFamily::IIB, 0}).find("even") != std::string::npos);
    CHECK(validation_message({CaseFamily::IIIA, 4}).find("odd") != std::string::npos);
    CHECK(validation_message({CaseFamily::IIIB, 1}).find("odd") != std::string::npos);
    CHECK_THROWS_AS(case_layout({CaseFamily::IIA, 7}), DomainError);
    CHECK(validation_message({CaseFamily::IB, 2}).empty());
    CHECK(validation_message({CaseFamily::IIIB, 3}).empty());
}

TEST_CASE("case family names") {
    CHECK(parse_case_family("IIIA") == CaseFamily::IIIA);
    CHECK(parse_case_family("iib") == CaseFamily::IIB);
    CHECK(to_string(CaseFamily::IB) == "IB");
    CHECK_THROWS_AS(parse_case_family("IV"), DomainError);
}

TEST_CASE("property: periodicity over [-1000, 1000]") {
    for (const CaseSpec& spec : all_small_specs()) {
        const CoinLayout layout = case_layout(spec);
        const long n = static_cast<long>(layout.period());
        for (long x = -1000; x <= 1000; ++x) {
            REQUIRE(layout.id_at(x) == layout.id_at(x + n));
        }
    }
}

TEST_CASE("property: swapping C0 and Cp maps each case onto its dual") {
    const CoinTable swapped = kTable.swapped();
    CHECK(swapped.c0() == hadamard());
    CHECK(swapped.cp() == identity_coin());
    for (const CaseSpec& spec : all_small_specs()) {
        const CoinLayout layout = case_layout(spec);
        const CoinLayout dual = case_layout({dual_of(spec.family), spec.period_or_q});
        CHECK(same_sites(layout, swapped, dual, kTable, 200));
    }
}

TEST_CASE("property: every case layout is reflection symmetric") {
    for (const CaseSpec& spec : all_small_specs()) {
        const CoinLayout layout = case_layout(spec);
        for (long x = 0; x <= 300; ++x) {
            REQUIRE(layout.id_at(x) == layout.id_at(-x));
        }
    }
}

TEST_CASE("property: minority-coin counts per period window") {
    for (const CaseSpec& spec : all_small_specs()) {
        const CoinLayout layout = case_layout(spec);
        const long n = static_cast<long>(layout.period());
        for (long start = -2 * n; start <= 2 * n; ++start) {
            int h_count = 0;
            for (long x = start; x < start + n; ++x) {
                h_count += is_h(layout, x) ? 1 : 0;
            }
            switch (spec.family) {
            case CaseFamily::IA:
            case CaseFamily::IIB: CHECK(h_count == 1); break;
            case CaseFamily::IB:
            case CaseFamily::IIA: CHECK(h_count == n - 1); break;
            case CaseFamily::IIIA:
            case CaseFamily::IIIB: CHECK(h_count == spec.period_or_q); break;
            }
        }
    }
}

TEST_CASE("pattern strings reproduce the six case layouts") {
    struct Row {
        const char* text;
        CaseSpec spec;
    };
    const Row rows[] = {
        {"H1I13", {CaseFamily::IA, 14}},  {"I1H13", {CaseFamily::IB, 14}},   {"H13I1", {CaseFamily::IIA, 14}},
        {"I13H1", {CaseFamily::IIB, 14}}, {"H19I19", {CaseFamily::IIIA, 19}}, {"I7H7", {CaseFamily::IIIB, 7}},
        {"H1I2", {CaseFamily::IA, 3}},    {"h3i3", {CaseFamily::IIIA, 3}},
    };
    for (const Row& row : rows) {
        const PatternLayout parsed = parse_pattern(row.text);
        CAPTURE(row.text);
        CHECK(parsed.layout.period() == case_layout(row.spec).period());
        CHECK(same_sites(parsed.layout, parsed.table, case_layout(row.spec), kTable, 120));
    }
}

TEST_CASE("pattern strings: general coins and errors") {
    const PatternLayout parsed = parse_pattern("G<0.5,0,0>2H1");
    CHECK(parsed.table.size() == 3);
    CHECK(parsed.layout.period() == 3);
    CHECK(max_entry_difference(coin_at(parsed.layout, parsed.table, 0), hadamard()) <= 1e-15);
    // Even first block starts at x = 0.
    CHECK(parsed.layout.anchor() == 0);
    CHECK(parsed.layout.id_at(2) == kCp);

    const CoinTable custom(hadamard(), identity_coin());
    CHECK(coin_at(parse_pattern("H1", custom).layout, parse_pattern("H1", custom).table, 5) == identity_coin());

    for (const char* bad : {"", "X3", "H0", "H", "G<1,2>1", "G<0.5,0,0", "G1", "H2I-1", "G<2,0,0>1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_pattern(bad), DomainError);
    }
}
