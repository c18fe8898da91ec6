#include "qwalk/layout.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>

#include "qwalk/detail/parse.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr std::size_t kMaxPatternPeriod = 1'000'000;

long floor_mod(long value, long modulus) {
    const long r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::vector<CoinId> two_block_pattern(CoinId first, std::size_t first_count, CoinId second,
                                      std::size_t second_count) {
    std::vector<CoinId> pattern(first_count, first);
    pattern.insert(pattern.end(), second_count, second);
    return pattern;
}

} // namespace

CoinTable::CoinTable() : CoinTable(identity_coin(), hadamard()) {}

CoinTable::CoinTable(CoinOperator c0, CoinOperator cp) : coins_{c0, cp} {
    if (!check_unitary(c0)) {
        throw DomainError("coin table: C0 is not unitary within 1e-12");
    }
    if (!check_unitary(cp)) {
        throw DomainError("coin table: Cp is not unitary within 1e-12");
    }
}

CoinId CoinTable::add(const CoinOperator& coin) {
    if (!check_unitary(coin)) {
        throw DomainError("coin table: added coin is not unitary within 1e-12");
    }
    coins_.push_back(coin);
    return coins_.size() - 1;
}

CoinTable CoinTable::swapped() const {
    CoinTable out = *this;
    std::swap(out.coins_[kC0], out.coins_[kCp]);
    return out;
}

CoinLayout::CoinLayout(std::vector<CoinId> pattern, long anchor) : pattern_(std::move(pattern)), anchor_(0) {
    if (pattern_.empty()) {
        throw DomainError("coin layout: pattern must be nonempty");
    }
    anchor_ = floor_mod(anchor, static_cast<long>(pattern_.size()));
}

CoinId CoinLayout::id_at(long x) const {
    return pattern_[static_cast<std::size_t>(floor_mod(x + anchor_, static_cast<long>(pattern_.size())))];
}

CoinLayout layout_from_pattern(std::vector<CoinId> pattern, long anchor) {
    return CoinLayout(std::move(pattern), anchor);
}

const CoinOperator& coin_at(const CoinLayout& layout, const CoinTable& table, long x) {
    return table[layout.id_at(x)];
}

std::string_view to_string(CaseFamily family) {
    switch (family) {
    case CaseFamily::IA: return "IA";
    case CaseFamily::IB: return "IB";
    case CaseFamily::IIA: return "IIA";
    case CaseFamily::IIB: return "IIB";
    case CaseFamily::IIIA: return "IIIA";
    case CaseFamily::IIIB: return "IIIB";
    }
    return "?";
}

CaseFamily parse_case_family(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (CaseFamily f : {CaseFamily::IA, CaseFamily::IB, CaseFamily::IIA, CaseFamily::IIB, CaseFamily::IIIA,
                         CaseFamily::IIIB}) {
        if (upper == to_string(f)) {
            return f;
        }
    }
    throw DomainError("unknown case family '" + std::string(name) + "' (expected IA, IB, IIA, IIB, IIIA or IIIB)");
}

bool is_family_three(CaseFamily family) { return family == CaseFamily::IIIA || family == CaseFamily::IIIB; }

void validate(const CaseSpec& spec) {
    const int n = spec.period_or_q;
    const std::string tag(to_string(spec.family));
    switch (spec.family) {
    case CaseFamily::IA:
    case CaseFamily::IB:
        if (n < 2) {
            throw DomainError("case " + tag + " requires period N >= 2, got " + std::to_string(n));
        }
        break;
    case CaseFamily::IIA:
    case CaseFamily::IIB:
        if (n < 2 || n % 2 != 0) {
            throw DomainError("case " + tag + " requires an even period N >= 2, got " + std::to_string(n));
        }
        break;
    case CaseFamily::IIIA:
    case CaseFamily::IIIB:
        if (n < 3 || n % 2 == 0) {
            throw DomainError("case " + tag + " requires an odd q >= 3, got " + std::to_string(n));
        }
        break;
    }
}

CoinLayout case_layout(const CaseSpec& spec) {
    validate(spec);
    const auto n = static_cast<std::size_t>(spec.period_or_q);
    switch (spec.family) {
    case CaseFamily::IA:
        return CoinLayout(two_block_pattern(kCp, 1, kC0, n - 1), 0);
    case CaseFamily::IB:
        return CoinLayout(two_block_pattern(kC0, 1, kCp, n - 1), 0);
    case CaseFamily::IIA: {
        std::vector<CoinId> pattern(n, kCp);
        pattern[n / 2] = kC0;
        return CoinLayout(std::move(pattern), 0);
    }
    case CaseFamily::IIB: {
        std::vector<CoinId> pattern(n, kC0);
        pattern[n / 2] = kCp;
        return CoinLayout(std::move(pattern), 0);
    }
    // Family III: the first block of q sites is centered on the origin, so
    // x uses the first block iff mod(x + (q-1)/2, 2q) < q.
    case CaseFamily::IIIA:
        return CoinLayout(two_block_pattern(kCp, n, kC0, n), static_cast<long>((n - 1) / 2));
    case CaseFamily::IIIB:
        return CoinLayout(two_block_pattern(kC0, n, kCp, n), static_cast<long>((n - 1) / 2));
    }
    throw DomainError("unknown case family");
}

PatternLayout parse_pattern(std::string_view text, const CoinTable& base) {
    CoinTable table = base;
    std::vector<CoinId> pattern;
    std::size_t first_count = 0;
    std::size_t pos = 0;

    auto fail = [&](const std::string& why) -> DomainError {
        return DomainError("pattern '" + std::string(text) + "': " + why);
    };

    while (pos < text.size()) {
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        ++pos;
        CoinId id = 0;
        if (letter == 'H') {
            id = kCp;
        } else if (letter == 'I') {
            id = kC0;
        } else if (letter == 'G') {
            if (pos >= text.size() || (text[pos] != '<' && text[pos] != '(')) {
                throw fail("G must be followed by <rho,theta,phi>");
            }
            const char close = text[pos] == '<' ? '>' : ')';
            const std::size_t end = text.find(close, pos);
            if (end == std::string_view::npos) {
                throw fail("unterminated G parameter list");
            }
            const std::string_view args = text.substr(pos + 1, end - pos - 1);
            const std::size_t c1 = args.find(',');
            const std::size_t c2 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
            if (c2 == std::string_view::npos || args.find(',', c2 + 1) != std::string_view::npos) {
                throw fail("G expects exactly three parameters rho,theta,phi");
            }
            CoinParams params{detail::parse_number<double>(args.substr(0, c1), "rho"),
                              detail::parse_number<double>(args.substr(c1 + 1, c2 - c1 - 1), "theta"),
                              detail::parse_number<double>(args.substr(c2 + 1), "phi")};
            id = table.add(make_general_coin(params));
            pos = end + 1;
        } else {
            throw fail(std::string("unknown coin letter '") + text[pos - 1] + "'");
        }

        const std::size_t digits_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == digits_begin) {
            throw fail("coin letter must be followed by a positive count");
        }
        std::size_t count = 0;
        const auto parsed = std::from_chars(text.data() + digits_begin, text.data() + pos, count);
        if (parsed.ec != std::errc{} || count == 0) {
            throw fail("block counts must be positive");
        }
        if (count > kMaxPatternPeriod || pattern.size() + count > kMaxPatternPeriod) {
            throw fail("period exceeds " + std::to_string(kMaxPatternPeriod));
        }
        if (pattern.empty()) {
            first_count = count;
        }
        pattern.insert(pattern.end(), count, id);
    }

    if (pattern.empty()) {
        throw fail("empty pattern");
    }
    const long anchor = first_count % 2 == 1 ? static_cast<long>((first_count - 1) / 2) : 0;
    return PatternLayout{CoinLayout(std::move(pattern), anchor), std::move(table)};
}

} // namespace qwalk
