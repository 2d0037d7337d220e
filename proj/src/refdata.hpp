#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgarc {

// Reference data for complete-arc sizes: the published tables of smallest
// known sizes, the critical values per q for the three construction
// families, the named q-sets, size predictions, bound checks, and the
// certified spectrum ceiling M_q.
//
// Only q and the size itself are stored per record. The derived columns
// (A_q, B_q, D_bar) are always recomputed from the defining formulas;
// check_tables() compares the recomputation against a verbatim copy of the
// printed columns so any transcription or formula error surfaces.

struct ReferenceRecord {
    uint32_t q = 0;
    uint32_t t_bar = 0;    // smallest known complete-arc size
    bool exact = false;    // marked as exactly t_2(2,q), not just a record
    int source_table = 0;  // 1..4
};

struct CriticalRecord {
    uint32_t q = 0;
    char which = '?';  // 'H', 'G', 'J'
    uint32_t value = 0;
};

// k measured against the sqrt-multiple and ln-power bounds, plus the two
// derived columns printed alongside each table row. a_q is the piecewise
// step coefficient; it has no value past q = 8192, hence has_aq.
struct BoundReport {
    uint32_t q = 0;
    uint32_t k = 0;
    bool below_4_sqrt = false;    // k < 4 sqrt(q)
    bool below_4_5_sqrt = false;  // k < 4.5 sqrt(q)
    bool below_4_75_sqrt = false; // k < 4.75 sqrt(q)
    bool below_5_sqrt = false;    // k < 5 sqrt(q)
    bool below_ln075 = false;     // k < sqrt(q) ln^0.75 q
    bool below_ln0735 = false;    // k < sqrt(q) ln^0.735 q
    bool has_aq = false;
    int32_t aq = 0;               // floor(a_q sqrt(q) - k), exact arithmetic
    uint32_t bq_hundredths = 0;   // k/sqrt(q) rounded up at two decimals
};

struct PredictionRecord {
    uint32_t q = 0;
    double t_hat = 0.0;      // 0.95821 sqrt(q) ln^0.75 q
    bool has_known = false;  // a reference record exists for this q
    uint32_t t_bar = 0;      // valid only when has_known
    double delta_bar = 0.0;  // t_bar - t_hat, valid only when has_known
    double p_bar = 0.0;      // 100 delta_bar / t_bar, valid only when has_known
};

struct SpectrumCeiling {
    uint32_t q = 0;
    uint32_t value = 0;
    std::string trace;  // which eligibility clauses fired, or why none did
};

struct QClass {
    uint32_t q = 0;
    bool is_prime_power = false;
    uint32_t p = 0;  // valid only when is_prime_power
    uint32_t h = 0;
    bool in_t1 = false;
    bool in_t2 = false;
    bool in_t3 = false;
    bool in_q = false;
    bool in_n = false;
};

// Result of the full recomputation sweep over every embedded row.
// mismatches holds anything unexplained; noted_anomalies holds the cells
// whose printed value is known to disagree with the defining formula by one
// final-digit unit, re-verified to still match their cataloged readings.
struct TableCheck {
    int rows = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> noted_anomalies;
};

std::span<const ReferenceRecord> reference_records();
std::span<const CriticalRecord> critical_records();
std::optional<ReferenceRecord> known_size(uint32_t q);
std::optional<uint32_t> critical_value(uint32_t q, char which);

PredictionRecord predicted_size(uint32_t q);

// k / (sqrt(q) ln^c q); at c = 0 this is the B_q column before rounding.
double d_bar_value(uint32_t q, uint32_t k, double c);
// Same with k taken from the reference record for q, if one exists.
std::optional<double> d_bar(uint32_t q, double c);

BoundReport check_bounds(uint32_t q, uint32_t k);
SpectrumCeiling spectrum_ceiling(uint32_t q);
QClass q_class(uint32_t q);
TableCheck check_tables();

}
