#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psb/geometry.hpp"

namespace psb {

enum class Name { rect4, hex6, rect8, rect12, hex12 };

enum class Role { primary, secondary, tertiary };

std::string to_string(Name n);
std::optional<Name> parse_name(std::string_view s);
const std::vector<Name>& all_constructions();

// A slope-bundle construction: 2k boundary lines (rows 2b-1, 2b bound the
// strip of bundle b), bundle roles, and the reference tables it is checked
// against (per-multiplicity coverage areas a_i, crossing-density coefficients
// of m^2, and the non-grid crossing types keyed by bundle signature).
struct ConstructionSpec {
    Name name;
    std::string id;
    int k = 0;
    std::vector<Line> boundary;  // 2k lines, bundles 1..k
    std::vector<Role> roles;     // index 0 unused; 1..k
    Quad cell_area;              // grid-cell area coefficient (area * m^2)
    std::map<int, Quad> area_table;
    std::map<int, Rat> lambda_table;

    struct TypeRow {
        uint32_t mask = 0;  // bit b-1 set for bundle b
        Quad w;
    };
    std::vector<TypeRow> types;

    uint32_t primary_mask = 0;
    Point center;  // common point of all strip axes

    const Line& row(int i) const { return boundary.at(i - 1); }  // 1-based
    Strip strip_of_bundle(int b) const;
    Line axis_of_bundle(int b) const;
    bool is_primary(int b) const { return (primary_mask >> (b - 1)) & 1u; }
};

const ConstructionSpec& get_construction(Name name);

// Canonical fixture text for the shipped coefficient tables (data/constructions).
std::string_view table_fixture_text(Name name);
ConstructionSpec parse_table_fixture(std::string_view text);
uint64_t fnv1a64(std::string_view bytes);

struct Arrangement {
    const ConstructionSpec* spec = nullptr;
    int m = 0;
    std::vector<Line> lines;  // k*m lines

    int k() const { return spec->k; }
    long line_count() const { return static_cast<long>(lines.size()); }
};

// m equidistant lines per bundle, centered in the strip with spacing
// width/m; m must be odd and >= 3.
Arrangement build(Name name, int m);

// Exact area of the region covered by exactly i of the k strips, for every
// i >= 2 with nonzero area, by vertical decomposition of the boundary lines.
std::map<int, Quad> coverage_areas(Name name);

// (a_i + sum of w over types of multiplicity i) / cell_area; the expected
// quadratic coefficient of the i-wise crossing count.
std::map<int, Rat> predicted_lambda_coefficients(Name name);

std::string signature_str(uint32_t mask);
std::vector<int> signature_bundles(uint32_t mask);

}  // namespace psb
