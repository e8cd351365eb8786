#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psb/construction.hpp"

namespace psb {

// Exact exhaustive crossing census of an arrangement: every cross-bundle line
// pair meets in one point; points are grouped by their exact coordinate key.
struct CrossingCensus {
    Name name;
    int m = 0;
    std::map<int, unsigned long long> lambda;                 // multiplicity -> count
    std::map<uint32_t, unsigned long long> signature_counts;  // bundle mask -> count
    // Points with fewer lines through them than strips strictly containing
    // them (some covering bundle misses its line there). All other crossings
    // are "generic": one line per covering strip.
    std::map<uint32_t, unsigned long long> deficient_counts;
    unsigned long long total_points = 0;

    unsigned long long lambda_at(int i) const {
        auto it = lambda.find(i);
        return it == lambda.end() ? 0 : it->second;
    }
};

CrossingCensus crossing_census(const Arrangement& arr, int threads = 1);

// Both sides of the pair-conservation identity
//   sum_i C(i,2) * lambda_i == C(km,2) - k*C(m,2).
struct Conservation {
    unsigned long long lhs = 0, rhs = 0;
    bool ok() const { return lhs == rhs; }
};
Conservation conservation(const CrossingCensus& c, const Arrangement& arr);

// Crossing patterns the reference type tables enumerate: deficient crossings
// of multiplicity >= 3 away from grid vertices (at most one primary bundle in
// the signature). Generic crossings, grid vertices included, are accounted
// for by the coverage areas instead.
std::map<uint32_t, unsigned long long> classify_types(const CrossingCensus& c,
                                                      const ConstructionSpec& spec);

// Per-multiplicity and per-type comparison against the expected m^2 densities.
struct AsymptoticReport {
    struct LambdaRow {
        int m = 0;
        int multiplicity = 0;
        unsigned long long observed = 0;
        Rat coefficient;    // expected count ~ coefficient * m^2
        Rat residual;       // observed - coefficient*m^2
        bool ok = false;    // |residual| <= slack*m
    };
    struct TypeRow {
        int m = 0;
        uint32_t signature = 0;
        unsigned long long observed = 0;
        Rat density;        // expected count ~ density * m^2
        Rat residual;
        bool ok = false;
    };
    Name name;
    std::vector<LambdaRow> lambda_rows;
    std::vector<TypeRow> type_rows;
    std::vector<std::string> failures;
    bool pass = true;
};

AsymptoticReport verify_asymptotics(Name name, const std::vector<int>& m_list,
                                    const Rat& slack = Rat(8), int threads = 1);

// CSV with header construction,m,i,lambda_i.
std::string census_csv(const CrossingCensus& c);
CrossingCensus census_from_csv(const std::string& text);

}  // namespace psb
