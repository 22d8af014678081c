#include "sl2pairs/render.hpp"

#include "sl2pairs/numth.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sl2pairs::render {

using chartab::Table;

namespace {

std::string pad(const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

std::string grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c) widths.push_back(0);
            widths[c] = std::max(widths[c], row[c].size());
        }
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << "  ";
            os << pad(rows[r][c], widths[c]);
        }
        os << "\n";
        if (r == 0) {
            size_t total = 0;
            for (size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c ? 2 : 0);
            os << std::string(total, '-') << "\n";
        }
    }
    return os.str();
}

} // namespace

std::string table_text(const Table& t) {
    std::ostringstream os;
    os << "Character table: " << t.kind << "  (p = " << t.p << ", order " << t.order << ")\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"class"};
    for (long c = 0; c < t.num_cols(); ++c) head.push_back(t.col_labels[c]);
    rows.push_back(head);
    std::vector<std::string> sizes{"size"};
    for (long c = 0; c < t.num_cols(); ++c) sizes.push_back(std::to_string(t.col_sizes[c]));
    rows.push_back(sizes);
    for (const auto& ch : t.chars) {
        std::vector<std::string> row{ch.name};
        for (const auto& v : ch.values) row.push_back(v.to_string());
        rows.push_back(std::move(row));
    }
    os << grid(rows);
    return os.str();
}

std::string verdict_text(const gelfand::PairVerdict& v) {
    std::ostringstream os;
    os << "p = " << v.p << ", subgroup " << v.label << " (order " << v.order << "): ";
    os << (v.strong ? "STRONG GELFAND PAIR" : "not a strong Gelfand pair");
    os << "  [method: " << v.method << "]\n";
    if (v.witness) os << "  witness: " << v.witness->to_string() << "\n";
    return os.str();
}

std::string classify_text(const classify::ClassifyReport& rep) {
    std::ostringstream os;
    os << "Strong Gelfand pairs of SL(2," << rep.p << ")  [" << rep.mode << " mode]\n";
    if (!rep.kind_rejections.empty()) {
        os << "\nMaximal subgroup kinds of PSL(2," << rep.p << ") other than the image of U:\n";
        for (const auto& line : rep.kind_rejections) os << "  - " << line << "\n";
    }
    os << "\nCandidates examined:\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"subgroup", "order", "verdict", "method", "detail"});
    for (const auto& c : rep.candidates) {
        std::string names = c.aliases.empty() ? "?" : c.aliases.front();
        for (size_t i = 1; i < c.aliases.size(); ++i) names += " = " + c.aliases[i];
        rows.push_back({names, std::to_string(c.order), c.strong ? "strong" : "no", c.method,
                        c.reason});
    }
    os << grid(rows);
    os << "\nStrong Gelfand pairs (proper subgroups, up to conjugacy): ";
    if (rep.strong_pairs.empty()) {
        os << "none\n";
    } else {
        for (size_t i = 0; i < rep.strong_pairs.size(); ++i)
            os << (i ? ", " : "") << rep.strong_pairs[i];
        os << "\n";
    }
    return os.str();
}

std::string gauss_text(long p) {
    auto gs = cyclo::gauss_sums(p);
    cyclo::CycNum sum = gs.z + gs.zt;
    cyclo::CycNum diff = gs.z - gs.zt;
    cyclo::CycNum sq = diff * diff;
    std::ostringstream os;
    os << "Gauss sums for p = " << p << " (lambda = " << numth::primitive_root(p)
       << ", t = " << numth::smallest_non_residue(p) << ")\n";
    os << "  Z      = " << gs.z.to_string() << "\n";
    os << "  Z^(t)  = " << gs.zt.to_string() << "\n";
    os << "  Z + Z^(t)      = " << sum.to_string() << "\n";
    os << "  (Z - Z^(t))^2  = " << sq.to_string() << "   (expected " << (p % 4 == 1 ? p : -p)
       << ")\n";
    bool ok = (sum == cyclo::CycNum(-1)) && (sq == cyclo::CycNum(p % 4 == 1 ? p : -p));
    os << "  identities " << (ok ? "hold" : "FAIL") << "\n";
    return os.str();
}

std::string multiplicity_text(const gelfand::MultiplicityMatrix& mm) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{""};
    for (const auto& n : mm.h_names) head.push_back(n);
    rows.push_back(head);
    for (size_t i = 0; i < mm.entries.size(); ++i) {
        std::vector<std::string> row{mm.g_names[i]};
        for (long e : mm.entries[i]) row.push_back(std::to_string(e));
        rows.push_back(std::move(row));
    }
    return grid(rows);
}

} // namespace sl2pairs::render
