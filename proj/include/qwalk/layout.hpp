#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Index into a CoinTable. Slots 0 and 1 are the no-potential and potential
/// coins; further slots hold extra coins named by pattern strings.
using CoinId = std::size_t;

inline constexpr CoinId kC0 = 0;
inline constexpr CoinId kCp = 1;

/// Coins available to a layout. Defaults to C0 = I, Cp = H.
class CoinTable {
public:
    CoinTable();
    CoinTable(CoinOperator c0, CoinOperator cp);

    const CoinOperator& c0() const { return coins_[kC0]; }
    const CoinOperator& cp() const { return coins_[kCp]; }
    const CoinOperator& operator[](CoinId id) const { return coins_.at(id); }
    std::size_t size() const { return coins_.size(); }

    /// Appends a coin and returns its id.
    CoinId add(const CoinOperator& coin);

    /// Same table with the C0 and Cp slots exchanged.
    CoinTable swapped() const;

private:
    std::vector<CoinOperator> coins_;
};

/// Period-N coin assignment: position x uses pattern[mod(x + anchor, N)]
/// where mod is the nonnegative remainder.
class CoinLayout {
public:
    CoinLayout(std::vector<CoinId> pattern, long anchor);

    std::size_t period() const { return pattern_.size(); }
    const std::vector<CoinId>& pattern() const { return pattern_; }
    long anchor() const { return anchor_; }

    CoinId id_at(long x) const;

private:
    std::vector<CoinId> pattern_;
    long anchor_;
};

/// Throws DomainError on an empty pattern. The anchor is reduced mod N.
CoinLayout layout_from_pattern(std::vector<CoinId> pattern, long anchor);

const CoinOperator& coin_at(const CoinLayout& layout, const CoinTable& table, long x);

enum class CaseFamily { IA, IB, IIA, IIB, IIIA, IIIB };

/// `period_or_q` is N for families I and II and q for family III (period 2q).
struct CaseSpec {
    CaseFamily family;
    int period_or_q;
};

std::string_view to_string(CaseFamily family);
/// Accepts "IA", "ib", ... Throws DomainError for anything else.
CaseFamily parse_case_family(std::string_view name);
bool is_family_three(CaseFamily family);

/// Throws DomainError naming the violated constraint: N >= 2 for family I,
/// even N >= 2 for family II, odd q >= 3 for family III.
void validate(const CaseSpec& spec);

/// Layout for one of the six case families with C0 / Cp slots:
///   IA   Cp at x = 0 (mod N), C0 elsewhere
///   IB   C0 at x = 0 (mod N), Cp elsewhere
///   IIA  C0 at x = N/2 (mod N), Cp elsewhere
///   IIB  Cp at x = N/2 (mod N), C0 elsewhere
///   IIIA Cp on the block centered at the origin, |x| <= (q-1)/2 (mod 2q), C0 on the other q sites
///   IIIB the dual of IIIA
CoinLayout case_layout(const CaseSpec& spec);

/// A layout together with the table its ids refer to.
struct PatternLayout {
    CoinLayout layout;
    CoinTable table;
};

/// Parses the compact pattern notation, e.g. "H1I13" or "I7H7" or
/// "G<0.5,0,1.5707963>2H3". Letters: H -> the table's Cp slot, I -> the C0
/// slot, G<rho,theta,phi> -> a general coin appended to the table. Counts
/// are positive integers and sum to the period. When the first block has an
/// odd count it is centered on x = 0; otherwise it starts at x = 0.
PatternLayout parse_pattern(std::string_view text, const CoinTable& base = CoinTable{});

} // namespace qwalk
