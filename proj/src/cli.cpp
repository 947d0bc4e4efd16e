#include "tropadic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tropadic/complexes.hpp"
#include "tropadic/degeneration.hpp"
#include "tropadic/error.hpp"
#include "tropadic/gubler.hpp"
#include "tropadic/io.hpp"
#include "tropadic/laurent.hpp"
#include "tropadic/tilted.hpp"

namespace tropadic::cli {

namespace {

using io::Json;

/// Raised when the command ran but its subject failed validation.
struct ValidationFailure {
    Json report;
};

struct Options {
    std::string output;
    std::string dot;
    std::string format = "json";
    std::vector<std::string> inputs;
    std::vector<std::string> polys;
    std::string vars;
    std::string box;
    std::string point;
    std::string embedding;
    std::string domain;
    std::string fine;
    std::string coarse;
    std::int64_t denominator = 1;
    std::optional<std::int64_t> coarse_denominator;
    bool validate_samples = false;
    bool tropical_basis = false;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

RatVec rationals(const std::string& text) {
    RatVec out;
    for (const auto& s : split(text)) out.push_back(parse_rational(s));
    return out;
}

std::optional<Polyhedron> parse_box(const std::string& text, std::size_t dim) {
    if (text.empty()) return std::nullopt;
    const RatVec v = rationals(text);
    if (v.size() != 2 * dim)
        throw Error(ErrorKind::DimensionMismatch, "--box needs " + std::to_string(2 * dim) + " numbers");
    std::vector<std::pair<Rational, Rational>> ranges;
    for (std::size_t i = 0; i < dim; ++i) {
        if (v[2 * i + 1] < v[2 * i]) throw Error(ErrorKind::InvalidArgument, "--box range with min above max");
        ranges.emplace_back(v[2 * i], v[2 * i + 1]);
    }
    return Polyhedron::box(ranges);
}

ParsedPolys polynomials(const Options& o) {
    if (o.polys.empty()) throw Error(ErrorKind::InvalidArgument, "at least one --poly is required");
    return parse_polynomials(o.polys, o.vars.empty() ? std::vector<std::string>{} : split(o.vars));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

void emit(const Options& o, const Json& j, const std::string& dot, std::ostream& out) {
    if (!o.dot.empty()) write_text(o.dot, dot);
    const std::string text = o.format == "dot" ? dot : io::dump(j);
    if (o.output.empty())
        out << text;
    else
        write_text(o.output, text);
}

std::vector<Json> inputs(const Options& o) {
    std::vector<Json> out;
    for (const auto& p : o.inputs) out.push_back(io::read_json_file(p));
    return out;
}

Json single_input(const Options& o) {
    if (o.inputs.size() != 1) throw Error(ErrorKind::InvalidArgument, "exactly one --input is required");
    return io::read_json_file(o.inputs.front());
}

std::vector<std::string> embedding_variables(const EmbeddingData& e) {
    return e.variables.empty() ? default_variables(e.fan.ambient_dim()) : e.variables;
}

void cmd_trop(const Options& o, std::ostream& out) {
    const ParsedPolys parsed = polynomials(o);
    if (parsed.polys.size() != 1) throw Error(ErrorKind::InvalidArgument, "trop takes a single --poly");
    const LaurentPoly& f = parsed.polys.front();
    const auto box = parse_box(o.box, f.rank());
    const auto cells = hypersurface_trop(f, box ? *box : Polyhedron::universe(f.rank()));
    Json list = Json::array();
    std::vector<Polyhedron> clipped;
    for (const auto& c : cells) {
        Json argmin = Json::array();
        for (const auto& u : c.argmin) argmin.push_back(monomial_string(u, parsed.variables));
        list.push_back({{"cell", io::to_json(c.cell)},
                        {"clipped", io::to_json(c.clipped)},
                        {"dim", c.cell.dim()},
                        {"sample", io::to_json(relative_interior_point(c.clipped))},
                        {"argmin", argmin},
                        {"initial", to_string(c.initial, parsed.variables)}});
        clipped.push_back(c.clipped);
    }
    Json j{{"polynomial", to_string(f, parsed.variables)},
           {"variables", parsed.variables},
           {"box", box ? io::to_json(*box) : Json(nullptr)},
           {"cells", list}};
    const auto c = ExtendedComplex::from_polyhedra(Fan::trivial(f.rank()), clipped);
    emit(o, j, io::complex_dot(c), out);
}

void cmd_initial(const Options& o, std::ostream& out) {
    const ParsedPolys parsed = polynomials(o);
    const RatVec w = rationals(o.point);
    if (w.size() != parsed.variables.size())
        throw Error(ErrorKind::DimensionMismatch, "--point needs one coordinate per variable");
    const InitialIdeal ideal = initial_degeneration_ideal(parsed.polys, w, o.tropical_basis);
    Json values = Json::array(), forms = Json::array();
    for (const auto& f : parsed.polys) values.push_back(io::to_json(trop_eval(f, w).value));
    for (const auto& f : ideal.forms) forms.push_back(to_string(f, parsed.variables));
    Json j{{"point", io::to_json(w)},
           {"variables", parsed.variables},
           {"trop_values", values},
           {"initial_forms", forms},
           {"provenance", ideal.provenance},
           {"warnings", ideal.warnings}};
    std::string dot = "digraph initial {\n";
    for (std::size_t i = 0; i < ideal.forms.size(); ++i)
        dot += "  g" + std::to_string(i) + " [label=\"" + to_string(ideal.forms[i], parsed.variables) + "\"];\n";
    emit(o, j, dot + "}\n", out);
}

void cmd_tilted(const Options& o, std::ostream& out) {
    const Polyhedron p = io::polyhedron_from(single_input(o));
    const auto vars = o.vars.empty() ? default_variables(p.ambient_dim()) : split(o.vars);
    if (vars.size() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "one variable per coordinate");
    const TiltedPresentation t = tilted_algebra(p, o.denominator);
    Json j = io::to_json(t, vars);
    j["polyhedron"] = io::to_json(p);
    std::string dot = "digraph tilted {\n";
    for (std::size_t i = 0; i < t.generators.size(); ++i) {
        dot += "  g" + std::to_string(i + 1) + " [label=\"g" + std::to_string(i + 1) + " = " +
               to_string(t.generators[i], vars) + "\"";
        if (std::find(t.positive_part.begin(), t.positive_part.end(), i) != t.positive_part.end())
            dot += ", style=filled, fillcolor=lightgrey";
        dot += "];\n";
    }
    emit(o, j, dot + "}\n", out);
}

void cmd_refine(const Options& o, std::ostream& out) {
    std::vector<ExtendedComplex> complexes;
    for (const auto& j : inputs(o)) complexes.push_back(io::complex_from(j));
    if (complexes.empty()) throw Error(ErrorKind::InvalidArgument, "refine needs at least one --input");
    const ExtendedComplex r = common_refinement(complexes);
    Json maps = Json::array();
    for (const auto& c : complexes) maps.push_back(io::to_json(refinement_map(r, c)));
    emit(o, Json{{"complex", io::to_json(r)}, {"maps", maps}}, io::complex_dot(r), out);
}

void cmd_check(const Options& o, std::ostream& out) {
    const Json in = single_input(o);
    ValidationReport report;
    std::optional<ExtendedComplex> c;
    if (in.contains("family")) {
        c = io::complex_from(in);
        report = validate_complex(*c);
    } else {
        report = validate_complex(io::complex_fan_from(in), io::raw_faces_from(in));
        if (report.ok()) c = io::complex_from(in);
    }
    Json j{{"validation", io::to_json(report)}};
    if (!c) {
        if (!o.output.empty()) write_text(o.output, io::dump(j));
        throw ValidationFailure{j};
    }
    j["faces"] = c->size();
    j["locally_finite"] = is_locally_finite(*c);
    j["accumulation"] = nullptr;
    if (c->is_family())
        if (const auto a = detect_accumulation(*c->family())) j["accumulation"] = io::to_json(*a);
    const auto components = adjacency_components(*c);
    j["components"] = components.size();
    j["component_members"] = components;
    if (c->ambient_dim() == 1) {
        Json support = Json::array();
        for (const auto& i : support_intervals(*c)) support.push_back(to_string(i));
        j["support"] = support;
    }
    if (c->is_family()) {
        j["complete"] = nullptr;
    } else {
        const CoverResult r = completeness(*c);
        j["complete"] = r.covered;
        if (r.witness) j["uncovered"] = {{"stratum", r.witness->stratum}, {"point", io::to_json(r.witness->coords)}};
    }
    emit(o, j, io::adjacency_dot(*c), out);
}

EmbeddingData load_embedding(const Options& o) {
    if (o.embedding.empty()) throw Error(ErrorKind::InvalidArgument, "--embedding is required");
    return io::embedding_from(io::read_json_file(o.embedding));
}

ExtendedComplex load_complex(const std::string& path) { return io::complex_from(io::read_json_file(path)); }

void cmd_skeleton(const Options& o, std::ostream& out) {
    const EmbeddingData e = load_embedding(o);
    const ExtendedComplex c = io::complex_from(single_input(o));
    const GublerSkeleton s = build_skeleton(e, c, o.denominator, o.validate_samples);
    emit(o, io::to_json(s), io::skeleton_dot(s), out);
}

void cmd_adapt(const Options& o, std::ostream& out) {
    const EmbeddingData e = load_embedding(o);
    const ExtendedComplex c = io::complex_from(single_input(o));
    if (o.domain.empty()) throw Error(ErrorKind::InvalidArgument, "--domain is required");
    const Json d = io::read_json_file(o.domain);
    const std::vector<Polyhedron> v = io::raw_faces_from(d.is_array() ? Json{{"faces", d}} : d);
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "the domain has no polyhedra");
    for (const auto& p : v)
        if (p.ambient_dim() != c.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "domain dimension");
    const GublerSkeleton s = build_skeleton(e, c, o.denominator, o.validate_samples);
    const auto model = adapted_to(s, v);
    Json j{{"adapted", model.has_value()}};
    if (model) {
        j["faces"] = model->faces;
        j["model"] = io::to_json(model->sub);
    }
    emit(o, j, model ? io::skeleton_dot(model->sub) : io::skeleton_dot(s), out);
}

void cmd_morphism(const Options& o, std::ostream& out) {
    const EmbeddingData e = load_embedding(o);
    if (o.fine.empty() || o.coarse.empty()) throw Error(ErrorKind::InvalidArgument, "--fine and --coarse are required");
    const GublerSkeleton fine = build_skeleton(e, load_complex(o.fine), o.denominator);
    const GublerSkeleton coarse =
        build_skeleton(e, load_complex(o.coarse), o.coarse_denominator.value_or(o.denominator));
    const SkeletonMorphism m = skeleton_morphism(fine, coarse);
    std::string dot = "digraph morphism {\n  rankdir=LR;\n";
    for (const auto& a : m.arrows)
        dot += "  fine" + std::to_string(a.source) + " -> coarse" + std::to_string(a.target) + ";\n";
    emit(o, io::to_json(m, embedding_variables(e)), dot + "}\n", out);
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::NonRationalPoint:
        case ErrorKind::InvalidArgument:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::ZeroPolynomial:
        case ErrorKind::Overflow:
            return 1;
        default:
            return 2;
    }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact adic tropicalization toolkit", "tropadic"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--output,-o", o.output, "Write JSON here instead of stdout");
        sub->add_option("--dot", o.dot, "Also write a DOT graph to this path");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    };
    auto with_inputs = [&o](CLI::App* sub, bool many) {
        auto* opt = sub->add_option("--input,-i", o.inputs, many ? "Complex JSON files" : "Input JSON file")
                        ->check(CLI::ExistingFile);
        if (!many) opt->expected(1);
        return opt;
    };

    auto* trop = app.add_subcommand("trop", "Tropical hypersurface of a Laurent polynomial");
    common(trop);
    trop->add_option("--poly", o.polys, "Polynomial, e.g. \"x + y + 1\"")->required()->expected(1);
    trop->add_option("--vars", o.vars, "Comma-separated variable names");
    trop->add_option("--box", o.box, "xmin,xmax,ymin,ymax,...");

    auto* initial = app.add_subcommand("initial", "Initial forms at a point");
    common(initial);
    initial->add_option("--poly", o.polys, "Ideal generator (repeatable)")->required();
    initial->add_option("--point", o.point, "Comma-separated rational coordinates")->required();
    initial->add_option("--vars", o.vars, "Comma-separated variable names");
    initial->add_flag("--tropical-basis", o.tropical_basis, "The generators form a tropical basis");

    auto* tilted = app.add_subcommand("tilted", "Tilted algebra of a polyhedron");
    common(tilted);
    with_inputs(tilted, false)->required();
    tilted->add_option("--denominator,-D", o.denominator, "Value group level D")->check(CLI::PositiveNumber);
    tilted->add_option("--vars", o.vars, "Comma-separated variable names");

    auto* refine = app.add_subcommand("refine", "Common refinement of complexes");
    common(refine);
    with_inputs(refine, true)->required();

    auto* check = app.add_subcommand("check", "Validate a complex and report its combinatorics");
    common(check);
    with_inputs(check, false)->required();

    auto* skeleton = app.add_subcommand("skeleton", "Skeleton of the Gubler model of a complex");
    common(skeleton);
    skeleton->add_option("--embedding,-e", o.embedding, "Embedding JSON")->required()->check(CLI::ExistingFile);
    with_inputs(skeleton, false)->required();
    skeleton->add_option("--denominator,-D", o.denominator, "Value group level D")->check(CLI::PositiveNumber);
    skeleton->add_flag("--validate-samples", o.validate_samples, "Compare initial forms at a second sample");

    auto* adapt = app.add_subcommand("adapt", "Is a domain a union of faces of the skeleton?");
    common(adapt);
    adapt->add_option("--embedding,-e", o.embedding, "Embedding JSON")->required()->check(CLI::ExistingFile);
    with_inputs(adapt, false)->required();
    adapt->add_option("--domain", o.domain, "Polyhedra JSON")->required()->check(CLI::ExistingFile);
    adapt->add_option("--denominator,-D", o.denominator, "Value group level D")->check(CLI::PositiveNumber);
    adapt->add_flag("--validate-samples", o.validate_samples, "Compare initial forms at a second sample");

    auto* morphism = app.add_subcommand("morphism", "Morphism from a finer skeleton to a coarser one");
    common(morphism);
    morphism->add_option("--embedding,-e", o.embedding, "Embedding JSON")->required()->check(CLI::ExistingFile);
    morphism->add_option("--fine", o.fine, "Finer complex")->required()->check(CLI::ExistingFile);
    morphism->add_option("--coarse", o.coarse, "Coarser complex")->required()->check(CLI::ExistingFile);
    morphism->add_option("--denominator,-D", o.denominator, "Level of the finer skeleton")->check(CLI::PositiveNumber);
    morphism->add_option("--coarse-denominator", o.coarse_denominator, "Level of the coarser skeleton (default: D)")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, std::string(error_kind_name(ErrorKind::Parse)), e.what());
        return 1;
    }

    const std::map<CLI::App*, void (*)(const Options&, std::ostream&)> commands{
        {trop, cmd_trop},         {initial, cmd_initial},   {tilted, cmd_tilted}, {refine, cmd_refine},
        {check, cmd_check},       {skeleton, cmd_skeleton}, {adapt, cmd_adapt},   {morphism, cmd_morphism},
    };
    try {
        commands.at(app.get_subcommands().front())(o, out);
        return 0;
    } catch (const ValidationFailure& f) {
        if (o.output.empty()) out << io::dump(f.report);
        report_error(err, "InvalidComplex", "the complex failed validation");
        return 2;
    } catch (const Error& e) {
        report_error(err, std::string(error_kind_name(e.kind())), e.what());
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        report_error(err, std::string(error_kind_name(ErrorKind::Parse)), e.what());
        return 1;
    }
}

}  // namespace tropadic::cli
