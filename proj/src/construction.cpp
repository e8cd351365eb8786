#include "psb/construction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "construction_tables.inc"

namespace psb {

std::string to_string(Name n) {
    switch (n) {
        case Name::rect4: return "rect4";
        case Name::hex6: return "hex6";
        case Name::rect8: return "rect8";
        case Name::rect12: return "rect12";
        case Name::hex12: return "hex12";
    }
    return "?";
}

std::optional<Name> parse_name(std::string_view s) {
    for (Name n : all_constructions())
        if (s == to_string(n)) return n;
    return std::nullopt;
}

const std::vector<Name>& all_constructions() {
    static const std::vector<Name> all = {Name::rect4, Name::hex6, Name::rect8,
                                          Name::rect12, Name::hex12};
    return all;
}

std::string_view table_fixture_text(Name name) {
    switch (name) {
        case Name::rect4: return kTableRect4;
        case Name::hex6: return kTableHex6;
        case Name::rect8: return kTableRect8;
        case Name::rect12: return kTableRect12;
        case Name::hex12: return kTableHex12;
    }
    return {};
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Strip ConstructionSpec::strip_of_bundle(int b) const {
    const Line& l1 = row(2 * b - 1);
    const Line& l2 = row(2 * b);
    return Strip{l1.alpha, l1.beta, l1.gamma, l2.gamma};
}

Line ConstructionSpec::axis_of_bundle(int b) const {
    const Line& l1 = row(2 * b - 1);
    const Line& l2 = row(2 * b);
    return Line{l1.alpha, l1.beta, (l1.gamma + l2.gamma) / Quad(2), b, 0};
}

namespace {

Quad read_quad(std::istringstream& in, const std::string& ctx) {
    std::string r, s;
    if (!(in >> r >> s)) throw std::logic_error("bad quad in table row: " + ctx);
    return Quad(Rat::parse(r), Rat::parse(s));
}

void validate(ConstructionSpec& spec);

ConstructionSpec parse_impl(std::string_view text) {
    ConstructionSpec spec;
    std::istringstream stream{std::string(text)};
    std::string linebuf;
    std::vector<std::pair<int, Line>> rows;
    std::vector<std::pair<Role, std::vector<int>>> role_rows;
    while (std::getline(stream, linebuf)) {
        if (linebuf.empty() || linebuf[0] == '#') continue;
        std::istringstream in(linebuf);
        std::string tag;
        in >> tag;
        if (tag == "construction") {
            std::string id;
            in >> id;
            auto n = parse_name(id);
            if (!n) throw std::logic_error("unknown construction id: " + id);
            spec.name = *n;
            spec.id = id;
        } else if (tag == "k") {
            in >> spec.k;
        } else if (tag == "cell") {
            spec.cell_area = read_quad(in, "cell");
        } else if (tag == "role") {
            std::string which;
            in >> which;
            Role r = which == "primary"    ? Role::primary
                     : which == "tertiary" ? Role::tertiary
                                           : Role::secondary;
            std::vector<int> ids;
            int b;
            while (in >> b) ids.push_back(b);
            role_rows.emplace_back(r, std::move(ids));
        } else if (tag == "line") {
            int idx;
            in >> idx;
            Line l;
            l.alpha = read_quad(in, linebuf);
            l.beta = read_quad(in, linebuf);
            l.gamma = read_quad(in, linebuf);
            l.bundle = (idx + 1) / 2;
            l.index_in_bundle = 0;
            rows.emplace_back(idx, l);
        } else if (tag == "area") {
            int i;
            in >> i;
            spec.area_table[i] = read_quad(in, linebuf);
        } else if (tag == "lambda") {
            int i;
            std::string q;
            in >> i >> q;
            spec.lambda_table[i] = Rat::parse(q);
        } else if (tag == "type") {
            ConstructionSpec::TypeRow t;
            t.w = read_quad(in, linebuf);
            int b;
            while (in >> b) t.mask |= 1u << (b - 1);
            spec.types.push_back(t);
        } else {
            throw std::logic_error("unknown table tag: " + tag);
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, l] : rows) {
        if (idx != static_cast<int>(spec.boundary.size()) + 1)
            throw std::logic_error("non-contiguous line indices in table");
        spec.boundary.push_back(l);
    }
    spec.roles.assign(spec.k + 1, Role::secondary);
    for (auto& [r, ids] : role_rows)
        for (int b : ids) spec.roles.at(b) = r;
    for (int b = 1; b <= spec.k; ++b)
        if (spec.roles[b] == Role::primary) spec.primary_mask |= 1u << (b - 1);
    validate(spec);
    return spec;
}

void validate(ConstructionSpec& spec) {
    if (spec.k <= 0 || static_cast<int>(spec.boundary.size()) != 2 * spec.k)
        throw std::logic_error("table must have exactly 2k boundary lines");
    for (int b = 1; b <= spec.k; ++b) {
        const Line& l1 = spec.row(2 * b - 1);
        const Line& l2 = spec.row(2 * b);
        if (!(l1.alpha == l2.alpha && l1.beta == l2.beta))
            throw std::logic_error("strip rows of one bundle must share (alpha,beta)");
        if (l1.gamma == l2.gamma) throw std::logic_error("strip has zero width");
    }
    for (size_t i = 0; i < spec.boundary.size(); ++i)
        for (size_t j = i + 1; j < spec.boundary.size(); ++j) {
            const Line& a = spec.boundary[i];
            const Line& b = spec.boundary[j];
            if (a.bundle != b.bundle && parallel(a, b))
                throw std::logic_error("bundles must have pairwise distinct slopes");
            if (same_line(a, b)) throw std::logic_error("duplicate boundary line");
        }
    // All strip axes meet in one point; primary strips share their width.
    auto c = intersect(spec.axis_of_bundle(1), spec.axis_of_bundle(2));
    if (!c) throw std::logic_error("axes of bundles 1 and 2 are parallel");
    spec.center = *c;
    for (int b = 1; b <= spec.k; ++b) {
        Line ax = spec.axis_of_bundle(b);
        if (!ax.eval(spec.center.x, spec.center.y).is_zero())
            throw std::logic_error("strip axes are not concurrent");
    }
    std::optional<Quad> primary_w2;
    for (int b = 1; b <= spec.k; ++b) {
        if (spec.roles[b] != Role::primary) continue;
        const Line& l1 = spec.row(2 * b - 1);
        Quad dg = spec.row(2 * b).gamma - l1.gamma;
        Quad w2 = dg * dg / (l1.alpha * l1.alpha + l1.beta * l1.beta);
        if (primary_w2 && !(*primary_w2 == w2))
            throw std::logic_error("primary strips must share their geometric width");
        primary_w2 = w2;
    }
}

}  // namespace

ConstructionSpec parse_table_fixture(std::string_view text) {
    return parse_impl(text);
}

const ConstructionSpec& get_construction(Name name) {
    static const std::array<ConstructionSpec, 5> registry = [] {
        std::array<ConstructionSpec, 5> r;
        for (Name n : all_constructions())
            r[static_cast<size_t>(n)] = parse_impl(table_fixture_text(n));
        return r;
    }();
    return registry[static_cast<size_t>(name)];
}

Arrangement build(Name name, int m) {
    if (m < 3 || m % 2 == 0)
        throw usage_error("m must be an odd integer >= 3 (use floor(n/k) or floor(n/k)-1, "
                          "whichever is odd)");
    const ConstructionSpec& spec = get_construction(name);
    Arrangement arr;
    arr.spec = &spec;
    arr.m = m;
    arr.lines.reserve(static_cast<size_t>(spec.k) * m);
    for (int b = 1; b <= spec.k; ++b) {
        const Line& l1 = spec.row(2 * b - 1);
        const Line& l2 = spec.row(2 * b);
        Quad axis = (l1.gamma + l2.gamma) / Quad(2);
        Quad step = (l2.gamma - l1.gamma) / Quad(m);
        for (int j = 1; j <= m; ++j) {
            Quad off = Quad(Rat(2 * j - m - 1, 2));
            arr.lines.push_back(Line{l1.alpha, l1.beta, axis + off * step, b, j});
        }
    }
    return arr;
}

std::map<int, Quad> coverage_areas(Name name) {
    const ConstructionSpec& spec = get_construction(name);
    const auto& lines = spec.boundary;

    std::vector<Quad> xs;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            if (parallel(lines[i], lines[j])) continue;
            xs.push_back(intersect(lines[i], lines[j])->x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Strip> strips;
    for (int b = 1; b <= spec.k; ++b) strips.push_back(spec.strip_of_bundle(b));
    std::vector<const Line*> slanted;
    for (const Line& l : lines)
        if (!l.is_vertical()) slanted.push_back(&l);

    std::map<int, Quad> acc;
    for (size_t t = 0; t + 1 < xs.size(); ++t) {
        Quad xm = (xs[t] + xs[t + 1]) / Quad(2);
        Quad w = xs[t + 1] - xs[t];
        std::vector<Quad> ys;
        ys.reserve(slanted.size());
        for (const Line* l : slanted) ys.push_back(-(l->alpha * xm + l->gamma) / l->beta);
        std::sort(ys.begin(), ys.end());
        for (size_t i = 0; i + 1 < ys.size(); ++i) {
            if (ys[i] == ys[i + 1]) continue;  // concurrent boundary lines at slab edge
            Quad ym = (ys[i] + ys[i + 1]) / Quad(2);
            Point probe{xm, ym};
            int mult = 0;
            for (const Strip& s : strips)
                if (strip_side(s, probe) != Side::outside) ++mult;
            if (mult >= 2) {
                auto [it, unused] = acc.emplace(mult, Quad(0));
                it->second += w * (ys[i + 1] - ys[i]);
            }
        }
    }
    return acc;
}

std::map<int, Rat> predicted_lambda_coefficients(Name name) {
    const ConstructionSpec& spec = get_construction(name);
    std::map<int, Quad> weighted = spec.area_table;
    for (const auto& t : spec.types) {
        int size = __builtin_popcount(t.mask);
        auto [it, unused] = weighted.emplace(size, Quad(0));
        it->second += t.w;
    }
    std::map<int, Rat> out;
    for (auto& [i, q] : weighted) {
        Quad coeff = q / spec.cell_area;
        if (!coeff.is_rational())
            throw std::logic_error("lambda coefficient is not rational");
        out[i] = coeff.rational();
    }
    return out;
}

std::vector<int> signature_bundles(uint32_t mask) {
    std::vector<int> out;
    for (int b = 1; b <= 32; ++b)
        if (mask & (1u << (b - 1))) out.push_back(b);
    return out;
}

std::string signature_str(uint32_t mask) {
    std::string out;
    for (int b : signature_bundles(mask)) {
        if (!out.empty()) out += ",";
        out += "L" + std::to_string(b);
    }
    return out;
}

}  // namespace psb
