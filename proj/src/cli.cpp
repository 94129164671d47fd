#include "quiver/cli.hpp"

#include <CLI11.hpp>

#include "quiver/dimvec.hpp"
#include "quiver/error.hpp"
#include "quiver/forms.hpp"
#include "quiver/functors.hpp"
#include "quiver/io.hpp"

namespace quiver::cli {

namespace {

constexpr int schema_version = 1;

struct Options {
    std::string quiver_file;
    std::string x, y, rep, rep2;
    std::int64_t p = 5;
    std::uint64_t seed = 0;
    long bound = 50;
    long tmax = 200;
    long height = 10;
    int trials = 100;
    long t = 1;
    long vertex = 0;
    bool conjecture = false;
    bool json = false;
    const CLI::Option* bound_option = nullptr;
};

struct Context {
    const Options& opt;
    Quiver q;
    Json report;
};

DimVector require_vector(const Context& c, const std::string& text, const char* flag) {
    if (text.empty()) throw Error(Errc::InvalidArgument, std::string("missing --") + flag);
    return parse_dim_vector(text, c.q.vertex_count());
}

Json vertex_list(const std::vector<Index>& vs) {
    Json out = Json::array();
    for (Index v : vs) out.push_back(v + 1);
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) rows.push_back(dim_vector_to_json(m.row(r).transpose()));
    return rows;
}

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
    return {{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

Json spectral_to_json(const SpectralBound& b) {
    return {{"rho", b.rho},         {"coefficient", b.coefficient}, {"min_eigvec", b.min_eigvec},
            {"tail_bound", b.tail_bound}, {"margin", b.margin},      {"error_radius", b.error_radius},
            {"block", b.block}};
}

Json regularity_to_json(const RegularityCertificate& cert) {
    Json out{{"verdict", to_string(cert.verdict)}, {"bound", cert.bound_used}};
    out["witness"] = nullptr;
    if (cert.witness)
        out["witness"] = {{"t", cert.witness->t},
                          {"vertex", cert.witness->vertex + 1},
                          {"value", integer_to_json(cert.witness->value)}};
    out["period"] = cert.period ? Json(*cert.period) : Json(nullptr);
    out["spectral"] = nullptr;
    if (cert.spectral)
        out["spectral"] = {{"numerical", true},
                           {"forward", spectral_to_json(cert.spectral->forward)},
                           {"backward", spectral_to_json(cert.spectral->backward)}};
    return out;
}

Json defect_report_to_json(const DefectReport& r) {
    Json defects = Json::array();
    for (const auto& d : r.defects)
        defects.push_back({{"step", d.step}, {"vertex", d.vertex + 1}, {"multiplicity", d.multiplicity}});
    return {{"direction", to_string(r.direction)}, {"steps_run", r.steps_run},
            {"bound", r.bound},                   {"sufficient_bound", r.sufficient_bound},
            {"defects", std::move(defects)},      {"verdict", to_string(r.verdict)}};
}

Json scan_to_json(const SummandScan& s) {
    return {{"forward", defect_report_to_json(s.forward)}, {"backward", defect_report_to_json(s.backward)}};
}

Json sample_to_json(const GeneralPositionSample& s) {
    return {{"end_dim", s.end_dim}, {"best_trial", s.best_trial}, {"trials_run", s.trials_run}};
}

// A representation from --rep, or a general position sample of dimension
// --x drawn from stream `stream` of the seed.
Representation load_or_sample(Context& c, const std::string& rep_file, const std::string& x_text,
                              const char* x_flag, std::uint64_t stream, const char* label) {
    if (!rep_file.empty()) return load_representation(c.q, rep_file);
    const DimVector x = require_vector(c, x_text, x_flag);
    const PrimeField field(c.opt.p);
    auto sample = general_position_sample(c.q, x, field, c.opt.trials, derive_seed(c.opt.seed, stream));
    c.report["samples"][label] = sample_to_json(sample);
    return std::move(sample.rep);
}

int cmd_classify(Context& c) {
    const auto cert = type_certificate(c.q);
    c.report["quiver"] = quiver_to_json(c.q);
    c.report["type"] = to_string(cert.type);
    c.report["canonical_order"] = vertex_list(c.q.canonical_order());
    c.report["euler_matrix"] = matrix_to_json(euler_matrix(c.q));
    Json pivots = Json::array();
    for (const auto& v : cert.pivots) pivots.push_back(v.str());
    c.report["pivots"] = std::move(pivots);
    c.report["negative_vector"] = nullptr;
    if (cert.negative_vector) {
        c.report["negative_vector"] = dim_vector_to_json(*cert.negative_vector);
        c.report["negative_vector_tits"] = integer_to_json(tits_form(c.q, *cert.negative_vector));
    }
    return exit_ok;
}

int cmd_euler(Context& c) {
    const DimVector x = require_vector(c, c.opt.x, "x");
    const DimVector y = require_vector(c, c.opt.y, "y");
    c.report["x"] = dim_vector_to_json(x);
    c.report["y"] = dim_vector_to_json(y);
    c.report["euler"] = integer_to_json(euler_form(c.q, x, y));
    c.report["symmetric"] = integer_to_json(symmetric_form(c.q, x, y));
    c.report["tits_x"] = integer_to_json(tits_form(c.q, x));
    c.report["tits_y"] = integer_to_json(tits_form(c.q, y));
    return exit_ok;
}

int cmd_coxeter(Context& c) {
    const DimVector x = require_vector(c, c.opt.x, "x");
    c.report["x"] = dim_vector_to_json(x);
    c.report["t"] = c.opt.t;
    c.report["coxeter_matrix"] = matrix_to_json(coxeter_matrix(c.q));
    c.report["inverse_coxeter_matrix"] = matrix_to_json(inverse_coxeter_matrix(c.q));
    c.report["result"] = dim_vector_to_json(coxeter_apply(c.q, x, c.opt.t));
    return exit_ok;
}

int cmd_regular(Context& c) {
    const DimVector x = require_vector(c, c.opt.x, "x");
    const auto cert = regularity_check(c.q, x, c.opt.bound);
    c.report["x"] = dim_vector_to_json(x);
    c.report["regularity"] = regularity_to_json(cert);
    return cert.verdict == Regularity::Undetermined ? exit_inconclusive : exit_ok;
}

int cmd_lemma2(Context& c) {
    const DimVector x = require_vector(c, c.opt.x, "x");
    const auto r = lemma2_scan(c.q, x, c.opt.tmax, 50, c.opt.bound);
    c.report["x"] = dim_vector_to_json(x);
    c.report["t_max"] = c.opt.tmax;
    c.report["first_positive_t"] = r.first_positive_t;
    c.report["stable_t"] = r.stable_t ? Json(*r.stable_t) : Json(nullptr);
    c.report["window"] = r.window;
    Json trace = Json::array();
    for (const auto& [t, v] : r.trace) trace.push_back({t, integer_to_json(v)});
    c.report["trace"] = std::move(trace);
    return r.stable_t ? exit_ok : exit_inconclusive;
}

int cmd_roots(Context& c) {
    if (!c.opt.x.empty()) {
        const DimVector x = require_vector(c, c.opt.x, "x");
        const auto rc = classify_root(c.q, x);
        c.report["x"] = dim_vector_to_json(x);
        c.report["kind"] = to_string(rc.kind);
        c.report["zero_root"] = rc.zero_root;
        c.report["tits"] = integer_to_json(tits_form(c.q, x));
        c.report["reduction_trace"] = vertex_list(rc.reduction_trace);
        c.report["reduced"] = dim_vector_to_json(rc.reduced);
        return exit_ok;
    }
    c.report["height"] = c.opt.height;
    Json list = Json::array();
    if (c.opt.conjecture) {
        for (const auto& cand : conjecture_scan(c.q, c.opt.height, c.opt.bound))
            list.push_back({{"x", dim_vector_to_json(cand.x)},
                            {"tits", integer_to_json(cand.tits)},
                            {"regularity", to_string(cand.regularity.verdict)}});
        c.report["candidates"] = std::move(list);
        return exit_ok;
    }
    for (const auto& x : positive_vectors(c.q.vertex_count(), c.opt.height)) {
        const auto rc = classify_root(c.q, x);
        if (rc.kind == RootKind::NotARoot) continue;
        list.push_back({{"x", dim_vector_to_json(x)},
                        {"kind", to_string(rc.kind)},
                        {"tits", integer_to_json(tits_form(c.q, x))}});
    }
    c.report["roots"] = std::move(list);
    return exit_ok;
}

int cmd_homext(Context& c) {
    const Representation x = load_or_sample(c, c.opt.rep, c.opt.x, "x", 1, "x");
    const Representation y = load_or_sample(c, c.opt.rep2, c.opt.y, "y", 2, "y");
    const auto r = hom_ext(x, y);
    bool verified = true;
    for (const auto& f : r.hom_basis) verified = verified && is_morphism(x, y, f);
    c.report["dim_x"] = dim_vector_to_json(x.dim_vector());
    c.report["dim_y"] = dim_vector_to_json(y.dim_vector());
    c.report["field"] = x.field().modulus();
    c.report["hom_dim"] = r.hom_dim;
    c.report["ext_dim"] = r.ext_dim;
    c.report["euler"] = integer_to_json(euler_form(c.q, x.dim_vector(), y.dim_vector()));
    c.report["hom_basis_verified"] = verified;
    return exit_ok;
}

int cmd_reflect(Context& c) {
    const Representation x = load_or_sample(c, c.opt.rep, c.opt.x, "x", 1, "x");
    const Index v = c.opt.vertex - 1;
    if (v < 0 || v >= c.q.vertex_count()) throw Error(Errc::InvalidVertex, "--vertex out of range");
    const bool sink = c.q.is_sink(v);
    if (!sink && !c.q.is_source(v))
        throw Error(Errc::NotASink, "vertex " + std::to_string(v + 1) + " is neither a sink nor a source");
    const auto r = sink ? reflect_sink(x, v) : reflect_source(x, v);
    c.report["vertex"] = v + 1;
    c.report["kind"] = sink ? "sink" : "source";
    c.report["defect"] = r.defect;
    c.report["dim_before"] = dim_vector_to_json(x.dim_vector());
    c.report["dim_after"] = dim_vector_to_json(r.rep.dim_vector());
    c.report["reflected_dim"] = dim_vector_to_json(simple_reflection(c.q, v, x.dim_vector()));
    c.report["reflected_quiver"] = quiver_to_json(r.rep.quiver());
    c.report["representation"] = representation_to_json(r.rep);
    return exit_ok;
}

int cmd_scan_summands(Context& c) {
    const Representation x = load_or_sample(c, c.opt.rep, c.opt.x, "x", 1, "x");
    std::optional<int> bound;
    if (c.opt.bound_option->count() > 0) bound = static_cast<int>(c.opt.bound);
    c.report["dim"] = dim_vector_to_json(x.dim_vector());
    c.report["scan"] = scan_to_json(summand_defect_scan(x, bound));
    return exit_ok;
}

int cmd_demo_lemma9(Context& c) {
    const DimVector x = require_vector(c, c.opt.x, "x");
    Lemma9Options options;
    options.trials = c.opt.trials;
    options.regularity_bound = c.opt.bound;
    options.t_max = c.opt.tmax;
    const auto r = demo_lemma9(c.q, x, PrimeField(c.opt.p), c.opt.seed, options);
    c.report["x"] = dim_vector_to_json(x);
    c.report["t"] = r.t;
    c.report["dim_r"] = dim_vector_to_json(r.dim_r);
    c.report["euler"] = integer_to_json(r.euler);
    c.report["hom_dim"] = r.hom_dim;
    c.report["ext_dim"] = r.ext_dim;
    c.report["r_end_dim"] = r.r_end_dim;
    c.report["x_end_dim"] = r.x_end_dim;
    c.report["r_scan"] = scan_to_json(r.r_scan);
    c.report["x_scan"] = scan_to_json(r.x_scan);
    c.report["witness"] = nullptr;
    if (r.witness) {
        Json blocks = Json::array();
        for (const auto& block : *r.witness) {
            Json rows = Json::array();
            for (Index i = 0; i < block.rows(); ++i) {
                Json row = Json::array();
                for (Index j = 0; j < block.cols(); ++j) row.push_back(block(i, j));
                rows.push_back(std::move(row));
            }
            blocks.push_back(std::move(rows));
        }
        c.report["witness"] = std::move(blocks);
    }
    return exit_ok;
}

void write_text(const Json& report, std::ostream& out) {
    for (const auto& [key, value] : report.items()) {
        if (value.is_string()) out << key << ": " << value.get<std::string>() << '\n';
        else out << key << ": " << value.dump() << '\n';
    }
}

void validate(const Options& o) {
    if (o.bound < 1) throw Error(Errc::InvalidArgument, "--bound must be positive");
    if (o.tmax < 0) throw Error(Errc::InvalidArgument, "--tmax must be nonnegative");
    if (o.height < 1) throw Error(Errc::InvalidArgument, "--height must be positive");
    if (o.trials < 1) throw Error(Errc::InvalidArgument, "--trials must be positive");
    PrimeField check(o.p);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using Handler = int (*)(Context&);
    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"classify", "Dynkin / Euclidean / wild type with its certificate", cmd_classify},
        {"euler", "Euler form <x, y> and Tits form values", cmd_euler},
        {"coxeter", "Coxeter matrix and Phi^t x", cmd_coxeter},
        {"regular", "regularity verdict of x", cmd_regular},
        {"lemma2", "smallest t with <Phi^-t x, x> > 0", cmd_lemma2},
        {"roots", "root classification and imaginary root scan", cmd_roots},
        {"homext", "Hom and Ext^1 dimensions", cmd_homext},
        {"reflect", "reflection functor at a sink or source", cmd_reflect},
        {"scan-summands", "preprojective and preinjective summand scans", cmd_scan_summands},
        {"demo-lemma9", "regular R with Hom(R, X) != 0", cmd_demo_lemma9},
    };

    CLI::App app{"Representations of finite acyclic quivers", "quivertool"};
    app.require_subcommand(1, 1);
    Options opt;
    std::map<const CLI::App*, Handler> handlers;
    for (const auto& [name, help, handler] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("quiver", opt.quiver_file, "quiver file")->required();
        sub->add_option("--x", opt.x, "dimension vector a,b,c");
        sub->add_option("--y", opt.y, "second dimension vector");
        sub->add_option("--rep", opt.rep, "representation JSON file");
        sub->add_option("--rep2", opt.rep2, "second representation JSON file");
        sub->add_option("--p", opt.p, "prime field size");
        sub->add_option("--seed", opt.seed, "random seed");
        auto* bound = sub->add_option("--bound", opt.bound, "regularity bound T or sweep bound");
        if (name == "scan-summands") opt.bound_option = bound;
        sub->add_option("--tmax", opt.tmax, "largest t for the positivity scan");
        sub->add_option("--height", opt.height, "height bound for root scans");
        sub->add_option("--trials", opt.trials, "general position trials");
        sub->add_option("--t", opt.t, "power of the Coxeter transformation");
        sub->add_option("--vertex", opt.vertex, "vertex to reflect at (1-based)");
        sub->add_flag("--conjecture", opt.conjecture, "scan for imaginary roots outside zero-root multiples");
        sub->add_flag("--json", opt.json, "emit a single JSON object");
        handlers[sub] = handler;
    }

    std::vector<std::string> argv_store{"quivertool"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        err << "error: InvalidArgument: " << message << '\n';
        return exit_invalid;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    try {
        validate(opt);
        Context c{opt, load_quiver(opt.quiver_file), Json::object()};
        c.report["schema_version"] = schema_version;
        c.report["command"] = chosen->get_name();
        const int code = handlers.at(chosen)(c);
        if (opt.json) out << c.report.dump() << '\n';
        else write_text(c.report, out);
        return code;
    } catch (const Error& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        err << "error: " << errc_name(e.code()) << ": " << message << '\n';
        return e.code() == Errc::NoPositiveT ? exit_inconclusive : exit_invalid;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << '\n';
        return 1;
    }
}

} // namespace quiver::cli
