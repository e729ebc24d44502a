// Built-in geometries and their reference parameters.
//
// Ten geometries are constructible by name: three generalized
// quadrangles of order (2,t) and seven slim dense near hexagons. Four
// further parameter rows (hex_iii, hex_iv, hex_v, hex_ix) are
// ingest-only: their expected invariants are tabulated so externally
// supplied geometries can be checked, but no construction is shipped.
//
// Every constructor cross-checks itself (code weight distributions,
// subspace counts, line counts) and throws InternalError on any
// discrepancy rather than returning a wrong geometry.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearhex/geometry.hpp"
#include "nearhex/repgroup.hpp"

namespace nearhex::cat {

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Key {
    gq21,          // 3x3 grid
    gq22,          // duads and synthemes of a 6-set
    gq24,          // duads extended by two 6-point classes
    hex_i,         // octads and trios of the binary Golay code
    hex_ii,        // cosets of the extended ternary Golay code
    hex_vi_glued,  // glue of two GQ(2,4) copies along a spread (search-based)
    hex_vii,       // GQ(2,4) x line
    hex_viii,      // totally isotropic planes of symplectic F2^6
    hex_x,         // GQ(2,2) x line
    hex_xi,        // GQ(2,1) x line
};

std::optional<Key> key_from_name(std::string_view name);
std::string name_of(Key k);
const std::vector<std::string>& builtin_names();

// Builds the named geometry. hex_vi_glued runs a bounded search and
// throws InternalError if the budget expires first; use try_build_glued
// to get an optional instead.
geom::IncidenceGeometry build(Key k, double budget_secs = 60.0);
std::optional<geom::IncidenceGeometry> try_build_glued(double budget_secs);

struct QuadTypeExpect {
    int t2 = 0;
    bool big = false;
    int per_point = 0;
};

struct ExpectedParams {
    std::string name;
    bool constructible = false;
    int num_points = 0;
    int t = 0;
    int diameter = 0;
    std::vector<QuadTypeExpect> quads;  // empty for the quadrangles
    int dim_v = 0;
    int npdim = 0;
    rep::GroupType minimal_type = rep::GroupType::NotExtraspecial;
};

const std::vector<ExpectedParams>& expected_table();  // all 14 rows
std::optional<ExpectedParams> expected_params(std::string_view name);

struct QuadProfileEntry {
    int t2 = 0;
    bool big = false;
    int per_point = 0;  // -1 if not the same at every point
    int total = 0;
};

struct ParamReport {
    std::string name;
    int num_points = 0;
    int num_lines = 0;
    int t = -1;  // -1 if lines per point are not uniform
    int diameter = 0;
    bool near_polygon = false;
    std::vector<QuadProfileEntry> quads;  // skipped for diameter-2 geometries
    int dim_v = 0;
    int npdim = 0;
    bool matches = false;                  // meaningful after verify_params
    std::vector<std::string> mismatches;
};

ParamReport measure(const geom::IncidenceGeometry& g, std::string_view name = "");
// Measures and compares against the expected row `name`.
ParamReport verify_params(const geom::IncidenceGeometry& g, std::string_view name);

// JSON round-trip: {"num_points": N, "lines": [[a,b,c],...], "name": ...}.
void save_geometry(const geom::IncidenceGeometry& g, const std::string& path,
                   std::string_view name = "");
std::string geometry_to_json_text(const geom::IncidenceGeometry& g, std::string_view name = "");
geom::IncidenceGeometry load_geometry(const std::string& path, std::string* name_out = nullptr);
geom::IncidenceGeometry geometry_from_json_text(const std::string& text,
                                                std::string* name_out = nullptr);

}  // namespace nearhex::cat
