#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "psb/exact.hpp"

namespace psb {

struct CountResult {
    mpz_class value;
    enum class Method { closed_form, brute_force, class_bfs, oracle } method;

    std::string method_str() const;
};

// Number of wiring diagrams of n wires (reduced words of the reversal
// permutation), by the factorial-over-odd-powers closed form.
CountResult stanley_A(int n);

// Same count by exhaustive search over words; capped (default n <= 6).
CountResult count_reduced_words(int n, int cap = 6);

// Number of commutation classes of those words, by BFS over canonical forms;
// capped (default n <= 8).
CountResult count_commutation_classes(int n, int cap = 8);

// Boxed plane partitions / rhombic tilings of the hexagon H(i,j,k):
// product over the i*j*k box of (a+b+c+2)/(a+b+c+1).
CountResult macmahon_P(long i, long j, long k);

// Independent oracle: direct count of i x j matrices with entries in [0,k],
// nonincreasing along rows and columns; capped at i*j*k <= cap.
CountResult count_plane_partitions_box(int i, int j, int k, long cap = 64);

// log2 P(n,n,n) / n^2 (growth rate in bits) to `digits` decimal digits
// (truncated lower value), one entry per requested n.
std::vector<std::string> fv_constant_trace(const std::vector<int>& ns, int digits = 30);

// ---- word-level utilities (exposed for tests) ----

using Word = std::vector<uint8_t>;  // letters 1..n-1

// s_{n-1}..s_1 layered word: 1, 21, 321, ... ; a reduced word of the reversal.
Word staircase_word(int n);
bool is_reduced_word(const Word& w, int n);

// Foata layered normal form: every letter placed in the earliest layer
// commutations allow, layers sorted; canonical per commutation class.
Word foata_canonical(const Word& w);

// Canonical forms of the classes one braid move away (i j i <-> j i j).
std::vector<Word> braid_neighbors(const Word& canon);

}  // namespace psb
