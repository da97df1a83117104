// SPDX-License-Identifier: Apache-2.0
//
// ringsynth: pattern synthesis for concentric ring antenna arrays
// Copyright (C) 2026 The ringsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ringsynth/config.hpp"

#include "ringsynth/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ringsynth {

using nlohmann::json;

void Diagnostics::merge(const Diagnostics& other)
{
    errors.insert(errors.end(), other.errors.begin(), other.errors.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

namespace {

// Typed field access that records schema violations instead of throwing.
class Reader {
public:
    Reader(const json& object, std::string path, Diagnostics& diag)
        : obj_(object), path_(std::move(path)), diag_(diag) {}

    bool valid_object() const { return obj_.is_object(); }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return obj_.contains(key) && !obj_.at(key).is_null(); }

    void reject_unknown(std::initializer_list<const char*> known) const
    {
        const std::set<std::string> allowed(known.begin(), known.end());
        for (const auto& [key, value] : obj_.items())
            if (!allowed.count(key))
                error(field(key), "unknown field");
    }

    template <typename T> std::optional<T> optional(const std::string& key) const
    {
        if (!has(key))
            return std::nullopt;
        return convert<T>(obj_.at(key), field(key));
    }

    template <typename T> std::optional<T> required(const std::string& key) const
    {
        if (!has(key)) {
            error(field(key), "required field is missing");
            return std::nullopt;
        }
        return convert<T>(obj_.at(key), field(key));
    }

    template <typename T> std::optional<std::vector<T>> optional_list(const std::string& key) const
    {
        if (!has(key))
            return std::nullopt;
        const json& v = obj_.at(key);
        if (!v.is_array()) {
            error(field(key), "expected an array");
            return std::nullopt;
        }
        std::vector<T> out;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto item = convert<T>(v[i], field(key) + "[" + std::to_string(i) + "]");
            if (item)
                out.push_back(*item);
            else
                ok = false;
        }
        if (!ok)
            return std::nullopt;
        return out;
    }

    void error(const std::string& f, const std::string& message) const
    {
        diag_.errors.push_back({f, message});
    }

private:
    template <typename T> std::optional<T> convert(const json& v, const std::string& f) const
    {
        if constexpr (std::is_same_v<T, bool>) {
            if (v.is_boolean())
                return v.get<bool>();
            error(f, "expected true or false");
        } else if constexpr (std::is_integral_v<T>) {
            if (v.is_number_integer())
                return v.get<T>();
            if (v.is_number_float()) {
                const double d = v.get<double>();
                if (std::floor(d) == d && std::fabs(d) < 1e9)
                    return static_cast<T>(d);
            }
            error(f, "expected an integer");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (v.is_number())
                return v.get<T>();
            error(f, "expected a number");
        } else {
            if (v.is_string())
                return v.get<std::string>();
            error(f, "expected a string");
        }
        return std::nullopt;
    }

    const json& obj_;
    std::string path_;
    Diagnostics& diag_;
};

std::optional<TargetKind> kind_from_string(const std::string& s)
{
    for (auto k : {TargetKind::flat_top, TargetKind::equi_ripple, TargetKind::difference,
                   TargetKind::equi_ripple_with_nulls, TargetKind::tabulated})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

const json* section(const json& doc, const char* key, Diagnostics& diag, bool required)
{
    if (!doc.contains(key) || doc.at(key).is_null()) {
        if (required)
            diag.errors.push_back({key, "required section is missing"});
        return nullptr;
    }
    if (!doc.at(key).is_object()) {
        diag.errors.push_back({key, "expected an object"});
        return nullptr;
    }
    return &doc.at(key);
}

void parse_geometry(const json& node, GeometryConfig& g, Diagnostics& diag)
{
    Reader r(node, "geometry", diag);
    r.reject_unknown({"wavelength", "center_element", "radii", "counts", "n_rings", "ring_spacing",
                      "element_spacing"});
    if (auto v = r.required<double>("wavelength"))
        g.wavelength = *v;
    if (auto v = r.optional<bool>("center_element"))
        g.center_element = *v;
    g.radii = r.optional_list<double>("radii");
    g.counts = r.optional_list<int>("counts");
    g.n_rings = r.optional<int>("n_rings");
    g.ring_spacing = r.optional<double>("ring_spacing");
    g.element_spacing = r.optional<double>("element_spacing");

    const bool explicit_form = r.has("radii");
    const bool uniform_form = r.has("n_rings");
    if (explicit_form == uniform_form)
        r.error("geometry", "give exactly one of 'radii' or 'n_rings'");
    if (uniform_form && r.has("counts"))
        r.error("geometry.counts", "counts only apply to the explicit 'radii' form");
    if (explicit_form && r.has("ring_spacing"))
        r.error("geometry.ring_spacing", "ring_spacing only applies to the 'n_rings' form");
}

void parse_target(const json& node, TargetConfig& t, const std::filesystem::path& base_dir,
                  Diagnostics& diag)
{
    Reader r(node, "target", diag);
    r.reject_unknown({"kind", "passband_edge", "transition_width", "sll_db", "aperture_rings", "file",
                      "nulls"});
    const auto kind_name = r.required<std::string>("kind");
    if (!kind_name)
        return;
    const auto kind = kind_from_string(*kind_name);
    if (!kind) {
        r.error("target.kind", "unknown kind '" + *kind_name + "'");
        return;
    }
    t.kind = *kind;

    switch (t.kind) {
    case TargetKind::flat_top:
        if (auto v = r.required<double>("passband_edge"))
            t.passband_edge = *v;
        t.transition_width = r.optional<double>("transition_width").value_or(0.0);
        break;
    case TargetKind::equi_ripple:
    case TargetKind::difference:
    case TargetKind::equi_ripple_with_nulls:
        if (auto v = r.required<double>("sll_db"))
            t.sll_db = *v;
        if (auto v = r.required<int>("aperture_rings"))
            t.aperture_rings = *v;
        break;
    case TargetKind::tabulated:
        if (auto v = r.required<std::string>("file")) {
            std::filesystem::path p(*v);
            if (p.is_relative() && !base_dir.empty())
                p = base_dir / p;
            t.table_file = p.lexically_normal().string();
        }
        break;
    }

    if (r.has("nulls")) {
        const json& nn = node.at("nulls");
        if (!nn.is_object()) {
            r.error("target.nulls", "expected an object");
        } else {
            Reader nr(nn, "target.nulls", diag);
            nr.reject_unknown({"centers", "depth_db", "width"});
            NullsConfig nulls;
            if (auto c = nr.optional_list<double>("centers"))
                nulls.centers = *c;
            else if (!nr.has("centers"))
                nr.error("target.nulls.centers", "required field is missing");
            if (auto v = nr.required<double>("depth_db"))
                nulls.depth_db = *v;
            if (auto v = nr.required<double>("width"))
                nulls.width = *v;
            t.nulls = nulls;
        }
    } else if (t.kind == TargetKind::equi_ripple_with_nulls) {
        r.error("target.nulls", "kind 'equi_ripple_with_nulls' needs a 'nulls' section");
    }
}

void parse_solver(const json& node, SolverConfig& s, Diagnostics& diag)
{
    Reader r(node, "solver", diag);
    r.reject_unknown({"max_passes", "tolerance", "sample_multiplier"});
    if (auto v = r.optional<int>("max_passes"))
        s.max_passes = *v;
    if (auto v = r.optional<double>("tolerance"))
        s.tolerance = *v;
    if (auto v = r.optional<int>("sample_multiplier"))
        s.sample_multiplier = *v;
}

void parse_output(const json& node, OutputConfig& o, Diagnostics& diag)
{
    Reader r(node, "output", diag);
    r.reject_unknown({"directory", "grid_points", "surface", "theta_points", "phi_points"});
    if (auto v = r.optional<std::string>("directory"))
        o.directory = *v;
    if (auto v = r.optional<int>("grid_points"))
        o.grid_points = *v;
    if (auto v = r.optional<bool>("surface"))
        o.surface = *v;
    if (auto v = r.optional<int>("theta_points"))
        o.theta_points = *v;
    if (auto v = r.optional<int>("phi_points"))
        o.phi_points = *v;
}

} // namespace

ParsedConfig parse_config(std::string_view text, const std::filesystem::path& base_dir)
{
    ParsedConfig out;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        out.diagnostics.errors.push_back({"document", std::string("not valid JSON: ") + e.what()});
        return out;
    }
    if (!doc.is_object()) {
        out.diagnostics.errors.push_back({"document", "top level must be an object"});
        return out;
    }

    SynthesisConfig cfg;
    Diagnostics& diag = out.diagnostics;
    Reader top(doc, "", diag);
    top.reject_unknown({"name", "description", "geometry", "target", "solver", "output"});
    cfg.name = top.optional<std::string>("name").value_or("");
    cfg.description = top.optional<std::string>("description").value_or("");

    if (const json* g = section(doc, "geometry", diag, true))
        parse_geometry(*g, cfg.geometry, diag);
    if (const json* t = section(doc, "target", diag, true))
        parse_target(*t, cfg.target, base_dir, diag);
    if (const json* s = section(doc, "solver", diag, false))
        parse_solver(*s, cfg.solver, diag);
    if (const json* o = section(doc, "output", diag, false))
        parse_output(*o, cfg.output, diag);

    if (diag.ok())
        out.config = std::move(cfg);
    return out;
}

ParsedConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParsedConfig out;
        out.diagnostics.errors.push_back({"document", "cannot read config file '" + path.string() + "'"});
        return out;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.parent_path());
}

RingGeometry make_geometry(const GeometryConfig& g)
{
    const double half = g.wavelength / 2.0;
    const double element_spacing = g.element_spacing.value_or(half);
    std::vector<double> radii;
    std::vector<int> counts;
    if (g.radii) {
        radii = *g.radii;
        if (g.counts) {
            counts = *g.counts;
        } else {
            for (double r : radii)
                counts.push_back(r > 0.0 ? elements_for_spacing(r, element_spacing) : 0);
        }
    } else if (g.n_rings) {
        if (*g.n_rings < 0)
            throw DomainError("n_rings must be >= 0");
        const double pitch = g.ring_spacing.value_or(half);
        for (int n = 1; n <= *g.n_rings; ++n) {
            radii.push_back(n * pitch);
            counts.push_back(pitch > 0.0 ? elements_for_spacing(n * pitch, element_spacing) : 0);
        }
    }
    return RingGeometry(g.wavelength, std::move(radii), std::move(counts), g.center_element);
}

TargetPattern make_target(const TargetConfig& t)
{
    auto pattern = [&]() {
        switch (t.kind) {
        case TargetKind::flat_top: return flat_top(t.passband_edge, t.transition_width);
        case TargetKind::equi_ripple:
        case TargetKind::equi_ripple_with_nulls: return equi_ripple(t.sll_db, t.aperture_rings);
        case TargetKind::difference: return difference(t.sll_db, t.aperture_rings);
        case TargetKind::tabulated: return from_table(read_table_csv(t.table_file));
        }
        throw DomainError("unknown target kind");
    }();
    if (t.nulls)
        pattern = with_nulls(pattern, t.nulls->centers, t.nulls->depth_db, t.nulls->width);
    return pattern;
}

Diagnostics validate_config(const SynthesisConfig& c)
{
    Diagnostics diag;
    auto error = [&](std::string f, std::string m) { diag.errors.push_back({std::move(f), std::move(m)}); };
    auto warn = [&](std::string f, std::string m) { diag.warnings.push_back({std::move(f), std::move(m)}); };

    if (c.solver.max_passes < 0)
        error("solver.max_passes", "must be >= 0");
    if (!(c.solver.tolerance >= 0.0))
        error("solver.tolerance", "must be >= 0");
    if (c.solver.sample_multiplier < 1)
        error("solver.sample_multiplier", "must be >= 1");
    if (c.output.grid_points < 801)
        error("output.grid_points", "must be >= 801");
    if (c.output.theta_points < 2)
        error("output.theta_points", "must be >= 2");
    if (c.output.phi_points < 1)
        error("output.phi_points", "must be >= 1");
    if (c.output.directory.empty())
        error("output.directory", "must not be empty");

    std::optional<RingGeometry> geom;
    const auto& g = c.geometry;
    if (!(g.wavelength > 0.0) || !std::isfinite(g.wavelength)) {
        error("geometry.wavelength", "must be positive");
    } else if (g.ring_spacing && !(*g.ring_spacing > 0.0)) {
        error("geometry.ring_spacing", "must be positive");
    } else if (g.element_spacing && !(*g.element_spacing > 0.0)) {
        error("geometry.element_spacing", "must be positive");
    } else {
        try {
            geom.emplace(make_geometry(g));
        } catch (const Error& e) {
            error("geometry", e.what());
        }
    }

    std::optional<TargetPattern> target;
    try {
        target.emplace(make_target(c.target));
    } catch (const Error& e) {
        error("target", e.what());
    }

    if (geom && target && geom->ring_count() > 0) {
        // Finest u-space detail the aperture resolves: lambda / D.
        const double resolution = geom->wavelength() / geom->aperture_diameter();
        const double aperture_wavelengths = geom->aperture_diameter() / geom->wavelength();
        char buf[256];
        const auto& t = c.target;
        if (t.kind == TargetKind::flat_top) {
            if (1.0 - t.passband_edge < resolution) {
                std::snprintf(buf, sizeof buf,
                              "passband edge %.3g leaves %.3g before |u| = 1, less than the aperture "
                              "resolution %.3g; expect a large residual",
                              t.passband_edge, 1.0 - t.passband_edge, resolution);
                warn("target.passband_edge", buf);
            }
            if (t.passband_edge < resolution / 2.0) {
                std::snprintf(buf, sizeof buf,
                              "passband edge %.3g is narrower than half the aperture resolution %.3g",
                              t.passband_edge, resolution);
                warn("target.passband_edge", buf);
            }
        } else if (t.kind != TargetKind::tabulated &&
                   t.aperture_rings > aperture_wavelengths + 1e-9) {
            std::snprintf(buf, sizeof buf,
                          "target beam assumes a %d-wavelength aperture but the array spans %.3g "
                          "wavelengths; the main lobe is narrower than the array can form",
                          t.aperture_rings, aperture_wavelengths);
            warn("target.aperture_rings", buf);
        }
        if (t.nulls && t.nulls->width < resolution / 2.0) {
            std::snprintf(buf, sizeof buf,
                          "null width %.3g is below half the aperture resolution %.3g", t.nulls->width,
                          resolution);
            warn("target.nulls.width", buf);
        }
    }
    return diag;
}

Diagnostics validate_file(const std::filesystem::path& path)
{
    ParsedConfig parsed = load_config(path);
    if (!parsed.config)
        return parsed.diagnostics;
    Diagnostics diag = parsed.diagnostics;
    diag.merge(validate_config(*parsed.config));
    return diag;
}

std::string config_to_json(const SynthesisConfig& c)
{
    json doc;
    doc["name"] = c.name;
    doc["description"] = c.description;

    json g;
    g["wavelength"] = c.geometry.wavelength;
    g["center_element"] = c.geometry.center_element;
    if (c.geometry.radii)
        g["radii"] = *c.geometry.radii;
    if (c.geometry.counts)
        g["counts"] = *c.geometry.counts;
    if (c.geometry.n_rings)
        g["n_rings"] = *c.geometry.n_rings;
    if (c.geometry.ring_spacing)
        g["ring_spacing"] = *c.geometry.ring_spacing;
    if (c.geometry.element_spacing)
        g["element_spacing"] = *c.geometry.element_spacing;
    doc["geometry"] = g;

    json t;
    t["kind"] = std::string(to_string(c.target.kind));
    switch (c.target.kind) {
    case TargetKind::flat_top:
        t["passband_edge"] = c.target.passband_edge;
        t["transition_width"] = c.target.transition_width;
        break;
    case TargetKind::tabulated:
        t["file"] = c.target.table_file;
        break;
    default:
        t["sll_db"] = c.target.sll_db;
        t["aperture_rings"] = c.target.aperture_rings;
        break;
    }
    if (c.target.nulls) {
        t["nulls"] = {{"centers", c.target.nulls->centers},
                      {"depth_db", c.target.nulls->depth_db},
                      {"width", c.target.nulls->width}};
    }
    doc["target"] = t;

    doc["solver"] = {{"max_passes", c.solver.max_passes},
                     {"tolerance", c.solver.tolerance},
                     {"sample_multiplier", c.solver.sample_multiplier}};
    doc["output"] = {{"directory", c.output.directory},
                     {"grid_points", c.output.grid_points},
                     {"surface", c.output.surface},
                     {"theta_points", c.output.theta_points},
                     {"phi_points", c.output.phi_points}};
    return doc.dump(2);
}

} // namespace ringsynth
