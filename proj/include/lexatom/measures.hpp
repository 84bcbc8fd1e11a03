#pragma once

#include <string>
#include <vector>

#include "lexatom/counting.hpp"

namespace lexatom {

enum class PwcCombine : uint8_t { Product, Sum };

PwcCombine pwc_combine_from_string(const std::string& s);
const char* pwc_combine_name(PwcCombine c);

struct ScoreRecord {
    CandidatePair pair;
    double pwc_u = 0, pwc_v = 0, pwc_combined = 0;
    double wa = 0;
    double cs_u = 0, cs_v = 0, cs_combined = 0;
    double mi = 0;
    bool degenerate = false;  // u == v

    bool operator==(const ScoreRecord&) const = default;
};

struct PwcValues {
    double u = 0, v = 0, combined = 0;
};

struct CsValues {
    double u = 0, v = 0, combined = 0;
};

// PWC([u,v],u) = FQ(u:[u,v]) / FQ([u,v]); absent phrase-context entries read
// as zero. The combined value is the product by default (sum behind the flag).
PwcValues pwc(const FrequencyStore& store, const CandidatePair& pair,
              PwcCombine combine = PwcCombine::Product);

// WA([u,v]) = (FQ(u:v) - FQ([u,v])) / FQ([u,v])
double wa(const FrequencyStore& store, const CandidatePair& pair);

// dot / (|v1| * |v2|); 0 when either norm is zero.
double cosine(const ContextVector& v1, const ContextVector& v2);

// cs_u = cosine(pair context, u context), likewise v; combined is the sum.
CsValues cs(const ContextVector& pair_vec, const ContextVector& u_vec,
            const ContextVector& v_vec);

// log2( P([u,v]) / (P(u) P(v)) ) with P(x) = FQ(x)/T; bits.
double mi(const FrequencyStore& store, const CandidatePair& pair);

struct ScoreOptions {
    Weighting weighting = Weighting::IdfTf;
    LogBase log_base = LogBase::Natural;
    PwcCombine pwc_combine = PwcCombine::Product;
};

// One record per store candidate, in candidate order.
std::vector<ScoreRecord> score_all(const FrequencyStore& store, const ScoreOptions& opts);

}  // namespace lexatom
