#include "psb/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "psb/fixedlog.hpp"

namespace psb {

std::string CountResult::method_str() const {
    switch (method) {
        case Method::closed_form: return "closed_form";
        case Method::brute_force: return "brute_force";
        case Method::class_bfs: return "class_bfs";
        case Method::oracle: return "oracle";
    }
    return "?";
}

CountResult stanley_A(int n) {
    if (n < 1) throw usage_error("stanley_A wants n >= 1");
    mpz_class num;
    unsigned long choose2 = static_cast<unsigned long>(n) * (n - 1) / 2;
    mpz_fac_ui(num.get_mpz_t(), choose2);
    mpz_class den = 1;
    for (int k = 1; k <= n - 1; ++k) {
        mpz_class base = 2 * n - 2 * k - 1;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), k);
        den *= pw;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("closed form did not produce an integer");
    return CountResult{num / den, CountResult::Method::closed_form};
}

namespace {

uint64_t pack_perm(const std::vector<uint8_t>& p) {
    uint64_t key = 0;
    for (uint8_t v : p) key = key * 16 + v;
    return key;
}

mpz_class count_paths_to_reversal(std::vector<uint8_t>& perm,
                                  std::unordered_map<uint64_t, mpz_class>& memo) {
    const int n = static_cast<int>(perm.size());
    bool done = true;
    for (int i = 0; i + 1 < n && done; ++i)
        if (perm[i] < perm[i + 1]) done = false;
    if (done) return 1;
    uint64_t key = pack_perm(perm);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (int i = 0; i + 1 < n; ++i) {
        if (perm[i] >= perm[i + 1]) continue;
        std::swap(perm[i], perm[i + 1]);
        total += count_paths_to_reversal(perm, memo);
        std::swap(perm[i], perm[i + 1]);
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

CountResult count_reduced_words(int n, int cap) {
    if (n < 1) throw usage_error("count_reduced_words wants n >= 1");
    if (n > cap)
        throw usage_error("count_reduced_words capped at n <= " + std::to_string(cap));
    std::vector<uint8_t> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<uint8_t>(i + 1);
    std::unordered_map<uint64_t, mpz_class> memo;
    return CountResult{count_paths_to_reversal(perm, memo), CountResult::Method::brute_force};
}

Word staircase_word(int n) {
    Word w;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = k; i >= 1; --i) w.push_back(static_cast<uint8_t>(i));
    return w;
}

bool is_reduced_word(const Word& w, int n) {
    if (static_cast<long>(w.size()) != static_cast<long>(n) * (n - 1) / 2) return false;
    std::vector<uint8_t> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<uint8_t>(i + 1);
    for (uint8_t s : w) {
        if (s < 1 || s >= n) return false;
        if (perm[s - 1] > perm[s]) return false;  // would cancel an inversion
        std::swap(perm[s - 1], perm[s]);
    }
    for (int i = 0; i < n; ++i)
        if (perm[i] != n - i) return false;
    return true;
}

Word foata_canonical(const Word& w) {
    std::array<int, 20> last_layer{};
    std::vector<std::vector<uint8_t>> layers;
    for (uint8_t v : w) {
        int prev = last_layer[v];
        if (v >= 1) prev = std::max(prev, last_layer[v - 1]);
        prev = std::max(prev, last_layer[v + 1]);
        int layer = prev + 1;
        if (static_cast<int>(layers.size()) < layer) layers.resize(layer);
        layers[layer - 1].push_back(v);
        last_layer[v] = layer;
    }
    Word out;
    out.reserve(w.size());
    for (auto& layer : layers) {
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Word> braid_neighbors(const Word& w) {
    const int L = static_cast<int>(w.size());
    if (L > 64) throw usage_error("braid_neighbors supports words up to 64 letters");
    // desc[p]: positions reachable from p through non-commuting steps.
    std::vector<uint64_t> desc(L, 0);
    for (int p = L - 2; p >= 0; --p) {
        uint64_t d = 0;
        for (int q = p + 1; q < L; ++q)
            if (std::abs(int(w[p]) - int(w[q])) <= 1) d |= (1ull << q) | desc[q];
        desc[p] = d;
    }
    std::vector<Word> out;
    for (int p = 0; p < L; ++p) {
        int r = -1;
        for (int q = p + 1; q < L; ++q)
            if (w[q] == w[p]) {
                r = q;
                break;
            }
        if (r < 0) continue;
        // Heap interval strictly between the two occurrences.
        int mid = -1, count = 0;
        uint64_t between = desc[p] & ~(~0ull << r);
        for (int q = p + 1; q < r && count < 2; ++q)
            if ((between >> q) & 1 && (desc[q] >> r) & 1) {
                mid = q;
                ++count;
            }
        if (count != 1) continue;
        if (std::abs(int(w[mid]) - int(w[p])) != 1) continue;
        // Linear extension [before] p mid r [after] exists; flip the triple.
        Word next;
        next.reserve(L);
        for (int x = 0; x < L; ++x)
            if (x != p && x != mid && x != r && ((desc[x] >> r) & 1)) next.push_back(w[x]);
        next.push_back(w[mid]);
        next.push_back(w[p]);
        next.push_back(w[mid]);
        for (int x = 0; x < L; ++x)
            if (x != p && x != mid && x != r && !((desc[x] >> r) & 1)) next.push_back(w[x]);
        out.push_back(foata_canonical(next));
    }
    return out;
}

namespace {

struct PackedWord {
    std::array<uint64_t, 3> v{};
    bool operator==(const PackedWord& o) const { return v == o.v; }
};

struct PackedWordHash {
    size_t operator()(const PackedWord& k) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : k.v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

PackedWord pack_word(const Word& w) {
    PackedWord k;
    for (size_t i = 0; i < w.size(); ++i) k.v[i / 16] |= uint64_t(w[i] & 0xf) << (4 * (i % 16));
    return k;
}

}  // namespace

CountResult count_commutation_classes(int n, int cap) {
    if (n < 1) throw usage_error("count_commutation_classes wants n >= 1");
    if (n > cap)
        throw usage_error("count_commutation_classes capped at n <= " + std::to_string(cap));
    if (n <= 2) return CountResult{1, CountResult::Method::class_bfs};
    if (n > 10) throw usage_error("word packing supports n <= 10");

    Word start = foata_canonical(staircase_word(n));
    std::unordered_set<PackedWord, PackedWordHash> seen;
    std::vector<Word> frontier{start}, next_frontier;
    seen.insert(pack_word(start));
    while (!frontier.empty()) {
        next_frontier.clear();
        for (const Word& w : frontier)
            for (Word& nb : braid_neighbors(w))
                if (seen.insert(pack_word(nb)).second) next_frontier.push_back(std::move(nb));
        frontier.swap(next_frontier);
    }
    return CountResult{mpz_class(static_cast<unsigned long>(seen.size())),
                       CountResult::Method::class_bfs};
}

CountResult macmahon_P(long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0) throw usage_error("macmahon_P wants nonnegative sizes");
    if (i == 0 || j == 0 || k == 0)
        return CountResult{1, CountResult::Method::closed_form};
    // Group the product by s = a+b+c: N(s) copies of (s+2)/(s+1).
    long S = i + j + k - 3;
    std::vector<long> ab(i + j - 1, 0);
    for (long a = 0; a < i; ++a)
        for (long b = 0; b < j; ++b) ab[a + b] += 1;
    std::vector<long> nsum(S + 1, 0);
    for (long s = 0; s < static_cast<long>(ab.size()); ++s)
        for (long c = 0; c < k; ++c) nsum[s + c] += ab[s];
    // Net exponent per integer value, then per prime; the result is integral,
    // so every prime exponent ends up nonnegative.
    std::vector<long> val_exp(S + 3, 0);
    for (long s = 0; s <= S; ++s) {
        val_exp[s + 2] += nsum[s];
        val_exp[s + 1] -= nsum[s];
    }
    std::map<long, long> prime_exp;
    for (long v = 2; v <= S + 2; ++v) {
        if (val_exp[v] == 0) continue;
        long x = v;
        for (long p = 2; p * p <= x; ++p)
            while (x % p == 0) {
                prime_exp[p] += val_exp[v];
                x /= p;
            }
        if (x > 1) prime_exp[x] += val_exp[v];
    }
    mpz_class out = 1;
    for (auto& [p, e] : prime_exp) {
        if (e < 0) throw std::logic_error("tiling product is not an integer");
        if (e == 0) continue;
        mpz_class pw, base = p;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        out *= pw;
    }
    return CountResult{out, CountResult::Method::closed_form};
}

namespace {

void box_dfs(std::vector<int>& flat, int pos, int rows, int cols, int maxv, mpz_class& count) {
    if (pos == rows * cols) {
        ++count;
        return;
    }
    int r = pos / cols, c = pos % cols;
    int bound = maxv;
    if (r > 0) bound = std::min(bound, flat[pos - cols]);
    if (c > 0) bound = std::min(bound, flat[pos - 1]);
    for (int v = 0; v <= bound; ++v) {
        flat[pos] = v;
        box_dfs(flat, pos + 1, rows, cols, maxv, count);
    }
}

}  // namespace

CountResult count_plane_partitions_box(int i, int j, int k, long cap) {
    if (i < 0 || j < 0 || k < 0) throw usage_error("box oracle wants nonnegative sizes");
    if (static_cast<long>(i) * j * k > cap)
        throw usage_error("box oracle capped at i*j*k <= " + std::to_string(cap));
    if (i == 0 || j == 0 || k == 0) return CountResult{1, CountResult::Method::oracle};
    std::vector<int> flat(static_cast<size_t>(i) * j, 0);
    mpz_class count = 0;
    box_dfs(flat, 0, i, j, k, count);
    return CountResult{count, CountResult::Method::oracle};
}

std::vector<std::string> fv_constant_trace(const std::vector<int>& ns, int digits) {
    std::vector<std::string> out;
    long prec = prec_for_digits(digits + 5);
    for (int n : ns) {
        if (n < 1 || n > 128) throw usage_error("trace wants 1 <= n <= 128");
        mpz_class p = macmahon_P(n, n, n).value;
        Ival v = ival_log2_int(p, prec).div_int(mpz_class(n) * n);
        out.push_back(v.decimal_lower(digits));
    }
    return out;
}

}  // namespace psb
