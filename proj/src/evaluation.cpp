#include "lexatom/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "lexatom/errors.hpp"
#include "lexatom/text_format.hpp"

namespace lexatom {

Measure measure_from_string(const std::string& s) {
    if (s == "pwc_comb") return Measure::PwcComb;
    if (s == "wa") return Measure::Wa;
    if (s == "cs_comb") return Measure::CsComb;
    if (s == "mi") return Measure::Mi;
    throw ArgumentError("unknown measure '" + s + "' (expected pwc_comb, wa, cs_comb or mi)");
}

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::PwcComb: return "pwc_comb";
        case Measure::Wa: return "wa";
        case Measure::CsComb: return "cs_comb";
        case Measure::Mi: return "mi";
    }
    return "?";
}

bool measure_ascending(Measure m) {
    return m != Measure::Mi;
}

RankedList rank(const std::vector<ScoreRecord>& records, Measure measure) {
    if (records.empty()) throw ArgumentError("rank over an empty record list");
    auto field = [measure](const ScoreRecord& r) {
        switch (measure) {
            case Measure::PwcComb: return r.pwc_combined;
            case Measure::Wa: return r.wa;
            case Measure::CsComb: return r.cs_combined;
            case Measure::Mi: return r.mi;
        }
        return 0.0;
    };
    RankedList list;
    list.measure_name = measure_name(measure);
    list.ascending = measure_ascending(measure);
    list.entries.reserve(records.size());
    for (const auto& r : records) list.entries.push_back({r.pair.u, r.pair.v, field(r)});

    const bool asc = list.ascending;
    std::sort(list.entries.begin(), list.entries.end(),
              [asc](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return asc ? a.score < b.score : a.score > b.score;
                  if (a.u != b.u) return a.u < b.u;
                  return a.v < b.v;
              });
    return list;
}

PrecisionTable precision_at(const RankedList& list, const GoldJudgments& gold,
                            std::span<const size_t> cutoffs) {
    PrecisionTable table;
    for (size_t k : cutoffs) {
        if (k == 0) throw ArgumentError("precision cutoff must be positive");
        if (k > list.entries.size())
            throw ArgumentError("precision cutoff " + std::to_string(k) +
                                " exceeds list length " + std::to_string(list.entries.size()));
    }
    uint64_t hits = 0;
    size_t pos = 0;
    std::vector<size_t> order(cutoffs.begin(), cutoffs.end());
    // Hit counts accumulate over one scan of the list; cutoffs may arrive in
    // any order, so resolve them sorted and map results back.
    std::vector<size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::map<size_t, uint64_t> hits_at;
    for (size_t k : sorted) {
        while (pos < k) {
            const RankedEntry& e = list.entries[pos];
            if (gold.atoms.count({e.u, e.v})) ++hits;
            ++pos;
        }
        hits_at[k] = hits;
    }
    for (size_t k : order) {
        table.cutoffs.push_back(k);
        table.hits.push_back(hits_at[k]);
        table.precisions.push_back(static_cast<double>(hits_at[k]) / static_cast<double>(k));
    }
    return table;
}

double average_precision(const RankedList& list, const GoldJudgments& gold) {
    if (gold.atoms.empty()) throw ArgumentError("average precision over an empty gold set");
    PairSet seen;
    double sum = 0;
    uint64_t found = 0;
    for (size_t i = 0; i < list.entries.size(); ++i) {
        const RankedEntry& e = list.entries[i];
        std::pair<std::string, std::string> key{e.u, e.v};
        seen.insert(key);
        if (gold.atoms.count(key)) {
            ++found;
            sum += static_cast<double>(found) / static_cast<double>(i + 1);
        }
    }
    for (const auto& atom : gold.atoms)
        if (!seen.count(atom))
            throw DataError("gold atom [" + atom.first + "," + atom.second +
                            "] is missing from the ranked list");
    return sum / static_cast<double>(gold.atoms.size());
}

RankedList merge_rankings(const RankedList& a, const RankedList& b, size_t common_depth) {
    if (common_depth > a.entries.size() || common_depth > b.entries.size())
        throw ArgumentError("common_depth " + std::to_string(common_depth) +
                            " exceeds a list length");

    PairSet ua, ub;
    for (const auto& e : a.entries) ua.insert({e.u, e.v});
    for (const auto& e : b.entries) ub.insert({e.u, e.v});
    if (ua != ub) {
        std::string msg = "merge inputs rank different universes;";
        for (const auto& p : ua)
            if (!ub.count(p)) msg += " only-in-a:[" + p.first + "," + p.second + "]";
        for (const auto& p : ub)
            if (!ua.count(p)) msg += " only-in-b:[" + p.first + "," + p.second + "]";
        throw DataError(msg);
    }

    PairSet b_prefix;
    for (size_t i = 0; i < common_depth; ++i)
        b_prefix.insert({b.entries[i].u, b.entries[i].v});

    RankedList merged;
    merged.measure_name = a.measure_name + "+" + b.measure_name;
    merged.ascending = a.ascending;
    PairSet emitted;
    auto emit = [&merged, &emitted](const RankedEntry& e) {
        if (emitted.insert({e.u, e.v}).second) merged.entries.push_back(e);
    };

    for (size_t i = 0; i < common_depth; ++i)
        if (b_prefix.count({a.entries[i].u, a.entries[i].v})) emit(a.entries[i]);

    size_t ia = 0, ib = 0;
    bool take_a = true;
    while (ia < a.entries.size() || ib < b.entries.size()) {
        auto advance = [&emitted](const RankedList& list, size_t& i) -> const RankedEntry* {
            while (i < list.entries.size()) {
                const RankedEntry& e = list.entries[i];
                ++i;
                if (!emitted.count({e.u, e.v})) return &e;
            }
            return nullptr;
        };
        const RankedEntry* next = take_a ? advance(a, ia) : advance(b, ib);
        if (next) emit(*next);
        take_a = !take_a;
        if (ia >= a.entries.size() && ib >= b.entries.size()) break;
    }
    return merged;
}

void emit_curve(const PrecisionTable& table, const std::filesystem::path& out) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot write " + out.string());
    f << "cutoff,precision\n";
    for (size_t i = 0; i < table.cutoffs.size(); ++i)
        f << table.cutoffs[i] << ',' << format_fixed(table.precisions[i], 3) << '\n';
    if (!f) throw IoError("write failed for " + out.string());
}

std::vector<size_t> clip_cutoffs(std::span<const size_t> cutoffs, size_t list_len) {
    std::vector<size_t> out;
    for (size_t c : cutoffs) {
        size_t clamped = std::min(c, list_len);
        if (clamped == 0) continue;
        if (std::find(out.begin(), out.end(), clamped) == out.end()) out.push_back(clamped);
    }
    return out;
}

}  // namespace lexatom
