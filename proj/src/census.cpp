#include "psb/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace psb {

namespace {

struct PointAgg {
    uint32_t pairs = 0;
    uint16_t mask = 0;
    uint8_t coverage = 0;  // strips strictly containing the point
};

using Buckets = std::unordered_map<std::string, PointAgg>;

// Intersections of all cross-bundle pairs with first line in [lo, hi).
void census_shard(const Arrangement& arr, size_t lo, size_t hi, Buckets& out) {
    const auto& lines = arr.lines;
    const ConstructionSpec& spec = *arr.spec;
    std::vector<Strip> strips;
    for (int b = 1; b <= spec.k; ++b) strips.push_back(spec.strip_of_bundle(b));
    std::string keybuf;
    for (size_t i = lo; i < hi; ++i) {
        const Line& a = lines[i];
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const Line& b = lines[j];
            if (a.bundle == b.bundle) continue;
            Quad d = a.alpha * b.beta - a.beta * b.alpha;
            Quad x = (a.beta * b.gamma - b.beta * a.gamma) / d;
            Quad y = (b.alpha * a.gamma - a.alpha * b.gamma) / d;
            keybuf.clear();
            x.append_key(keybuf);
            y.append_key(keybuf);
            PointAgg& agg = out[keybuf];
            if (agg.pairs == 0) {
                Point p{x, y};
                for (const Strip& s : strips)
                    if (strip_side(s, p) == Side::inside) agg.coverage += 1;
            }
            agg.pairs += 1;
            agg.mask |= (1u << (a.bundle - 1)) | (1u << (b.bundle - 1));
        }
    }
}

int multiplicity_from_pairs(uint32_t pairs) {
    // i lines pairwise crossing contribute C(i,2) pairs.
    uint32_t i = static_cast<uint32_t>((1.0 + std::sqrt(1.0 + 8.0 * pairs)) / 2.0);
    for (uint32_t c : {i - 1, i, i + 1})
        if (c >= 2 && c * (c - 1) / 2 == pairs) return static_cast<int>(c);
    throw std::logic_error("pair count at a point is not triangular");
}

}  // namespace

CrossingCensus crossing_census(const Arrangement& arr, int threads) {
    if (threads < 1) threads = 1;
    const size_t n = arr.lines.size();
    Buckets total;
    total.reserve(n * (n - 1) / 2 / 2);
    if (threads == 1) {
        census_shard(arr, 0, n, total);
    } else {
        // Contiguous blocks of the outer index, then a deterministic merge
        // (addition and bit-or commute, so the result has no thread order in it).
        std::vector<Buckets> parts(threads);
        std::vector<std::thread> workers;
        // Balance: earlier outer indices carry more inner iterations.
        std::vector<size_t> cuts(threads + 1, 0);
        double share = static_cast<double>(n) * (n - 1) / 2 / threads;
        size_t pos = 0;
        for (int t = 0; t < threads; ++t) {
            cuts[t] = pos;
            double acc = 0;
            while (pos < n && acc < share) acc += static_cast<double>(n - pos++ - 1);
        }
        cuts[threads] = n;
        for (int t = 0; t < threads; ++t)
            workers.emplace_back(census_shard, std::cref(arr), cuts[t], cuts[t + 1],
                                 std::ref(parts[t]));
        for (auto& w : workers) w.join();
        for (auto& part : parts)
            for (auto& [key, agg] : part) {
                PointAgg& dst = total[key];
                dst.pairs += agg.pairs;
                dst.mask |= agg.mask;
                dst.coverage = agg.coverage;  // identical wherever computed
            }
    }

    CrossingCensus c;
    c.name = arr.spec->name;
    c.m = arr.m;
    for (const auto& [key, agg] : total) {
        int mult = multiplicity_from_pairs(agg.pairs);
        if (mult != __builtin_popcount(agg.mask))
            throw std::logic_error("point multiplicity disagrees with its bundle set");
        c.lambda[mult] += 1;
        c.signature_counts[agg.mask] += 1;
        if (mult < agg.coverage) c.deficient_counts[agg.mask] += 1;
        c.total_points += 1;
    }
    return c;
}

Conservation conservation(const CrossingCensus& c, const Arrangement& arr) {
    Conservation out;
    for (const auto& [i, count] : c.lambda)
        out.lhs += static_cast<unsigned long long>(i) * (i - 1) / 2 * count;
    unsigned long long km = arr.lines.size();
    unsigned long long m = arr.m;
    out.rhs = km * (km - 1) / 2 - static_cast<unsigned long long>(arr.k()) * (m * (m - 1) / 2);
    return out;
}

std::map<uint32_t, unsigned long long> classify_types(const CrossingCensus& c,
                                                      const ConstructionSpec& spec) {
    std::map<uint32_t, unsigned long long> out;
    for (const auto& [mask, count] : c.deficient_counts) {
        if (__builtin_popcount(mask) < 3) continue;
        if (__builtin_popcount(mask & spec.primary_mask) > 1) continue;  // grid vertex
        out[mask] += count;
    }
    return out;
}

AsymptoticReport verify_asymptotics(Name name, const std::vector<int>& m_list,
                                    const Rat& slack, int threads) {
    const ConstructionSpec& spec = get_construction(name);
    AsymptoticReport rep;
    rep.name = name;
    std::map<int, Rat> coeffs = predicted_lambda_coefficients(name);
    for (int m : m_list) {
        Arrangement arr = build(name, m);
        CrossingCensus c = crossing_census(arr, threads);

        Conservation cons = conservation(c, arr);
        if (!cons.ok()) {
            rep.failures.push_back("conservation identity failed at m=" + std::to_string(m));
            rep.pass = false;
        }

        Rat bound = slack * Rat(m);
        for (const auto& [i, coeff] : coeffs) {
            AsymptoticReport::LambdaRow row;
            row.m = m;
            row.multiplicity = i;
            row.observed = c.lambda_at(i);
            row.coefficient = coeff;
            row.residual = Rat(static_cast<long>(row.observed)) - coeff * Rat(m) * Rat(m);
            row.ok = row.residual.abs() <= bound;
            if (!row.ok) {
                rep.failures.push_back("lambda_" + std::to_string(i) + " residual " +
                                       row.residual.str() + " exceeds " + bound.str() +
                                       " at m=" + std::to_string(m));
                rep.pass = false;
            }
            rep.lambda_rows.push_back(row);
        }
        // Multiplicities outside the expected table are a verification failure.
        for (const auto& [i, count] : c.lambda)
            if (i >= 3 && !coeffs.count(i)) {
                rep.failures.push_back("unexpected multiplicity " + std::to_string(i) +
                                       " at m=" + std::to_string(m));
                rep.pass = false;
            }

        auto observed_types = classify_types(c, spec);
        for (const auto& t : spec.types) {
            AsymptoticReport::TypeRow row;
            row.m = m;
            row.signature = t.mask;
            auto it = observed_types.find(t.mask);
            row.observed = it == observed_types.end() ? 0 : it->second;
            Quad density = t.w / spec.cell_area;
            if (!density.is_rational()) throw std::logic_error("type density is not rational");
            row.density = density.rational();
            row.residual = Rat(static_cast<long>(row.observed)) - row.density * Rat(m) * Rat(m);
            row.ok = row.residual.abs() <= bound;
            if (!row.ok) {
                rep.failures.push_back("type " + signature_str(t.mask) + " residual " +
                                       row.residual.str() + " exceeds " + bound.str() +
                                       " at m=" + std::to_string(m));
                rep.pass = false;
            }
            rep.type_rows.push_back(row);
            if (it != observed_types.end()) observed_types.erase(it);
        }
        for (const auto& [mask, count] : observed_types) {
            rep.failures.push_back("signature " + signature_str(mask) +
                                   " is outside the type table (m=" + std::to_string(m) +
                                   ", count=" + std::to_string(count) + ")");
            rep.pass = false;
        }
    }
    return rep;
}

std::string census_csv(const CrossingCensus& c) {
    std::ostringstream out;
    out << "construction,m,i,lambda_i\n";
    for (const auto& [i, count] : c.lambda)
        out << to_string(c.name) << "," << c.m << "," << i << "," << count << "\n";
    return out.str();
}

CrossingCensus census_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "construction,m,i,lambda_i")
        throw usage_error("bad census CSV header");
    CrossingCensus c;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        std::string id;
        int m, i;
        unsigned long long count;
        if (!(row >> id >> m >> i >> count)) throw usage_error("bad census CSV row: " + line);
        auto n = parse_name(id);
        if (!n) throw usage_error("bad construction in CSV: " + id);
        if (first) {
            c.name = *n;
            c.m = m;
            first = false;
        } else if (c.name != *n || c.m != m) {
            throw usage_error("census CSV mixes constructions");
        }
        c.lambda[i] = count;
        c.total_points += count;
    }
    return c;
}

}  // namespace psb
