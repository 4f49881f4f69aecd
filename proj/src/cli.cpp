#include "pathfree/cli.hpp"

#include "pathfree/certificate_json.hpp"
#include "pathfree/divider.hpp"
#include "pathfree/errors.hpp"
#include "pathfree/generators.hpp"
#include "pathfree/induced_path.hpp"
#include "pathfree/oracles.hpp"
#include "pathfree/random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace pathfree {

namespace {
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw UsageError("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const std::string & path, const std::string & content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw UsageError("cannot write '" + path + "'");
        out << content;
    }

    std::string fnv1a(const std::string & text)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : text) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    std::string number(double v)
    {
        std::ostringstream s;
        s << std::setprecision(10) << v;
        return s.str();
    }

    Rational rational_arg(const std::string & text, const char * flag)
    {
        try {
            return parse_rational(text);
        } catch (ParseError & e) {
            throw UsageError(std::string("--") + flag + ": " + e.what());
        }
    }

    struct Source {
        std::string graph_file;
        std::string gen;
        std::uint64_t seed = 0;

        void add(CLI::App * app)
        {
            app->add_option("--graph", graph_file, "edge-list file");
            app->add_option("--gen", gen, "generator spec, e.g. \"clique_union(5,5)\"");
            app->add_option("--seed", seed, "seed for generators and sampling");
        }

        Graph load() const
        {
            if (graph_file.empty() == gen.empty())
                throw UsageError("exactly one of --graph and --gen is required");
            if (!gen.empty())
                return generate(gen, seed);
            return parse_graph(read_file(graph_file));
        }

        void describe(Json & params) const
        {
            if (!gen.empty())
                params["gen"] = gen;
            else
                params["graph"] = graph_file;
            params["seed"] = seed;
        }
    };

    struct Row {
        std::string run_id, n, edges, k, s, epsilon, x, mode, outcome_type, achieved_size, target_size, verified_grade, wall_ms, seed;
    };

    const char * kHeader = "run_id,n,edges,k,s,epsilon,x,mode,outcome_type,achieved_size,target_size,verified_grade,wall_ms,seed";

    std::string csv(const Row & r)
    {
        const std::string * fields[] = {&r.run_id, &r.n, &r.edges, &r.k, &r.s, &r.epsilon, &r.x, &r.mode, &r.outcome_type,
            &r.achieved_size, &r.target_size, &r.verified_grade, &r.wall_ms, &r.seed};
        std::string line;
        for (auto * f : fields) {
            if (!line.empty() || f != fields[0])
                line += ',';
            line += *f;
        }
        return line;
    }

    // Options shared by the pipeline subcommands.
    struct PipelineFlags {
        std::string mode = "paper_exact";
        std::string C = "1";
        std::optional<std::size_t> a;
        std::optional<std::string> d, b;
        std::string base_d = "2";
        bool assume_pk_free = false;

        void add(CLI::App * app)
        {
            app->add_option("--mode", mode, "paper_exact or relaxed")->check(CLI::IsMember({"paper_exact", "relaxed"}));
            app->add_option("--C", C, "calibration constant (rational)");
            app->add_option("--a", a, "override the dense-engine exponent a");
            app->add_option("--d", d, "override the width exponent d");
            app->add_option("--b", b, "override the restricted-set exponent b");
            app->add_option("--base-d", base_d, "width exponent of the s = 0 divider");
            app->add_flag("--assume-pk-free", assume_pk_free, "skip the exact P_k-freeness check");
        }

        PipelineOptions options() const
        {
            PipelineOptions o;
            o.divide.mode = mode == "relaxed" ? DivideMode::relaxed : DivideMode::paper_exact;
            o.divide.C = rational_arg(C, "C");
            o.divide.a_override = a;
            if (d)
                o.divide.d_override = rational_arg(*d, "d");
            if (b)
                o.divide.b_override = rational_arg(*b, "b");
            o.divide.base_d = rational_arg(base_d, "base-d");
            o.assume_pk_free = assume_pk_free;
            return o;
        }

        void describe(Json & params) const
        {
            params["mode"] = mode;
            params["C"] = C;
            if (a)
                params["a"] = *a;
            if (d)
                params["d"] = *d;
            if (b)
                params["b"] = *b;
            params["base_d"] = base_d;
            params["assume_pk_free"] = assume_pk_free;
        }
    };

    struct Output {
        std::string cert_path;
        std::string csv_path;
        bool timing = false;

        void add(CLI::App * app)
        {
            app->add_option("--cert", cert_path, "write the certificate JSON here");
            app->add_option("--csv", csv_path, "write the CSV summary here instead of stdout");
            app->add_flag("--timing", timing, "fill the wall_ms column");
        }
    };

    class Stopwatch {
    public:
        Stopwatch() : start_(std::chrono::steady_clock::now()) {}
        std::string ms() const
        {
            const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
            return number(std::round(elapsed.count() * 1000) / 1000);
        }

    private:
        std::chrono::steady_clock::time_point start_;
    };

    struct Emit {
        std::ostream & out;
        const Output & output;

        void rows(const std::string & header, const std::vector<std::string> & lines) const
        {
            std::string text = header + "\n";
            for (auto & l : lines)
                text += l + "\n";
            if (output.csv_path.empty())
                out << text;
            else
                write_file(output.csv_path, text);
        }

        void certificate(const Json & cert) const
        {
            if (!output.cert_path.empty())
                write_file(output.cert_path, cert.dump(2) + "\n");
        }
    };

    Row base_row(const Json & params, const Graph & g, std::uint64_t seed)
    {
        Row r;
        r.run_id = fnv1a(params.dump());
        r.n = std::to_string(g.n());
        r.edges = std::to_string(g.edge_count());
        r.seed = std::to_string(seed);
        return r;
    }

    Json path_certificate(const Json & params, const std::vector<Vertex> & path)
    {
        Json p = params;
        p["k"] = path.size();
        return certificate_to_json(PathWitness{path}, p, "exact");
    }
}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Induced-path-free graph toolkit: certified blockades, restricted sets and homogeneous sets.", "pathfree"};
    app.require_subcommand(1);

    Source source;
    Output output;
    PipelineFlags flags;
    std::size_t k = 0;
    unsigned s = 0;
    std::string x_text, epsilon_text, alpha_text = "1";
    std::string model, gen_out, cert_file;
    std::vector<std::string> gens, epsilon_list{"1/4", "1/8", "1/16"}, c_list{"1/4", "1/2", "1", "2", "4"};

    auto * gen = app.add_subcommand("gen", "generate a graph as an edge list");
    gen->add_option("--model", model, "generator spec")->required();
    gen->add_option("--seed", source.seed, "seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto * find = app.add_subcommand("find-path", "exact search for an induced P_k");
    source.add(find);
    output.add(find);
    find->add_option("--k", k, "path order")->required()->check(CLI::PositiveNumber);

    auto * div = app.add_subcommand("divide", "x-sparse or (1-x)-dense blockade at level s");
    source.add(div);
    output.add(div);
    flags.add(div);
    div->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    div->add_option("--s", s, "level");
    div->add_option("--x", x_text, "rational in (0, 1/2)")->required();

    auto * restrict = app.add_subcommand("restrict", "epsilon-restricted set via transference");
    source.add(restrict);
    output.add(restrict);
    flags.add(restrict);
    restrict->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    restrict->add_option("--alpha", alpha_text, "positive rational");
    restrict->add_option("--epsilon", epsilon_text, "rational in (0, 1/2)")->required();

    auto * eh = app.add_subcommand("near-eh", "clique or stable set");
    source.add(eh);
    output.add(eh);
    flags.add(eh);
    eh->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    eh->add_option("--alpha", alpha_text, "positive rational");

    auto * verify = app.add_subcommand("verify", "re-check a certificate file against a graph file");
    verify->add_option("--graph", source.graph_file, "edge-list file")->required();
    verify->add_option("--cert", cert_file, "certificate JSON")->required();

    auto * cal = app.add_subcommand("calibrate", "sweep C over a suite and report below-target counts");
    cal->add_option("--gen", gens, "generator specs (repeatable)")->required();
    cal->add_option("--seed", source.seed);
    cal->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cal->add_option("--alpha", alpha_text);
    cal->add_option("--epsilon", epsilon_list, "epsilon values")->delimiter(',');
    cal->add_option("--C", c_list, "candidate C values")->delimiter(',');
    cal->add_option("--csv", output.csv_path);

    auto * bench = app.add_subcommand("bench", "pipeline vs oracle sizes over generator specs");
    bench->add_option("--gen", gens, "generator specs (repeatable)")->required();
    bench->add_option("--seed", source.seed);
    bench->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    bench->add_option("--alpha", alpha_text);
    bench->add_option("--csv", output.csv_path);
    flags.add(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Emit emit{out, output};
    try {
        if (gen->parsed()) {
            const std::string text = format_graph(generate(model, source.seed));
            if (gen_out.empty())
                out << text;
            else
                write_file(gen_out, text);
            return 0;
        }

        if (verify->parsed()) {
            const Graph g = parse_graph(read_file(source.graph_file));
            Json cert;
            try {
                cert = Json::parse(read_file(cert_file));
            } catch (Json::parse_error & e) {
                err << "error: certificate is not valid JSON: " << e.what() << "\n";
                return 1;
            }
            CertificateCheck check;
            try {
                check = check_certificate(g, cert);
            } catch (ParseError & e) {
                err << "FAIL: malformed certificate: " << e.what() << "\n";
                return 1;
            }
            if (!check.ok) {
                out << "FAIL " << cert.value("type", "?") << ": " << check.reason << "\n";
                return 1;
            }
            out << "ok " << cert.value("type", "?") << " " << check.grade << "\n";
            return 0;
        }

        const Rational alpha = rational_arg(alpha_text, "alpha");

        if (cal->parsed()) {
            std::vector<Graph> suite;
            for (auto & spec : gens)
                suite.push_back(generate(spec, source.seed));
            std::vector<Rational> eps, cs;
            for (auto & e : epsilon_list)
                eps.push_back(rational_arg(e, "epsilon"));
            for (auto & c : c_list)
                cs.push_back(rational_arg(c, "C"));
            PipelineOptions options;
            const auto points = calibrate(suite, eps, cs, k, alpha, options);
            // The target δ|G| falls as C grows, so the zero-miss set is upward
            // closed; report its smallest member.
            std::optional<Rational> chosen;
            for (auto & p : points)
                if (p.below_target == 0 && (!chosen || p.C < *chosen))
                    chosen = p.C;
            std::vector<std::string> lines;
            for (auto & p : points)
                lines.push_back(to_string(p.C) + "," + std::to_string(p.runs) + "," + std::to_string(p.below_target) + ","
                    + (chosen && *chosen == p.C ? "yes" : "no"));
            emit.rows("C,runs,below_target,chosen", lines);
            return 0;
        }

        if (bench->parsed()) {
            const auto options = flags.options();
            const double beta = 1.0 / (1.0 + to_double(alpha));
            const auto caps = OracleCaps::from_env();
            std::vector<std::string> lines;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const std::uint64_t seed = mix_seed(source.seed, i);
                std::string line = gens[i];
                if (line.find(',') != std::string::npos)
                    line = "\"" + line + "\"";
                try {
                    const Graph g = generate(gens[i], seed);
                    const auto result = near_eh(g, k, alpha, options);
                    std::string oracle = "";
                    if (g.n() <= caps.homogeneous) {
                        const auto best = brute_max_homogeneous(g, caps);
                        oracle = std::to_string(std::max(best.clique.size(), best.stable.size()));
                    }
                    const double n = static_cast<double>(g.n());
                    const double size = static_cast<double>(result.set.members.size());
                    const std::string exponent = g.n() >= 2 ? number(std::log2(size) / std::pow(std::log2(n), beta)) : "";
                    line += "," + std::to_string(g.n()) + "," + std::to_string(g.edge_count()) + "," + std::to_string(k) + ","
                        + to_string(alpha) + "," + std::to_string(result.set.members.size()) + "," + oracle + "," + exponent + ","
                        + std::to_string(seed) + ",ok";
                } catch (std::exception & e) {
                    std::string what = e.what();
                    for (auto & c : what)
                        if (c == ',' || c == '\n')
                            c = ';';
                    line += ",,,," + to_string(alpha) + ",,,," + std::to_string(seed) + ",error: " + what;
                }
                lines.push_back(line);
            }
            std::sort(lines.begin(), lines.end());
            emit.rows("family,n,edges,k,alpha,pipeline_size,oracle_size,exponent,seed,status", lines);
            return 0;
        }

        const Graph g = source.load();
        Json params = Json::object();
        Stopwatch clock;

        if (find->parsed()) {
            params["command"] = "find-path";
            source.describe(params);
            params["k"] = k;
            Row row = base_row(params, g, source.seed);
            row.k = std::to_string(k);
            auto path = find_induced_path(g, k);
            row.outcome_type = path ? "path_witness" : "none";
            row.achieved_size = path ? std::to_string(k) : "0";
            row.target_size = std::to_string(k);
            row.verified_grade = "exact";
            if (path) {
                auto ok = verify_path_witness(g, *path, k);
                if (!ok) {
                    err << "error: witness fails verification: " << ok.reason << "\n";
                    return 1;
                }
                emit.certificate(certificate_to_json(*path, params, "exact"));
            }
            row.wall_ms = output.timing ? clock.ms() : "";
            emit.rows(kHeader, {csv(row)});
            return 0;
        }

        const auto options = flags.options();

        if (div->parsed()) {
            const Rational x = rational_arg(x_text, "x");
            params["command"] = "divide";
            source.describe(params);
            params["k"] = k;
            params["s"] = s;
            params["x"] = to_string(x);
            flags.describe(params);
            Row row = base_row(params, g, source.seed);
            row.k = std::to_string(k);
            row.s = std::to_string(s);
            row.x = to_string(x);
            row.mode = flags.mode;
            const auto result = divide(g, k, s, x, options.divide);
            Json derived = Json::object();
            derived["route"] = result.route;
            derived["fallback"] = result.fallback;
            derived["claimed_length"] = result.claimed_length;
            derived["claimed_width"] = result.claimed_width;
            derived["width_met"] = result.width_met;
            if (s >= 1) {
                derived["y"] = to_string(result.y);
                const auto constants = constants_for(s, k, options.divide.C);
                derived["b"] = constants.b;
                derived["d"] = constants.d;
                derived["c"] = to_string(constants.c);
            }
            if (!result.note.empty())
                derived["note"] = result.note;
            int status = 0;
            if (auto * path = std::get_if<PathWitness>(&result.outcome)) {
                row.outcome_type = "path_witness";
                row.achieved_size = std::to_string(path->vertices.size());
                row.target_size = std::to_string(k);
                row.verified_grade = verify_path_witness(g, *path, k) ? "exact" : "refuted";
                Json p = params;
                p["k"] = k;
                emit.certificate(certificate_to_json(*path, p, row.verified_grade, derived));
            } else {
                const auto & blockade = std::get<Blockade>(result.outcome);
                Json p = params;
                p["min_length"] = blockade.length();
                p["min_width"] = blockade.width();
                row.outcome_type = blockade.degenerate ? "blockade_degenerate" : "blockade";
                row.achieved_size = std::to_string(blockade.width());
                row.target_size = std::to_string(result.claimed_width);
                row.verified_grade = verify_blockade(g, blockade, blockade.length(), blockade.width()) ? "exact" : "refuted";
                emit.certificate(certificate_to_json(blockade, p, row.verified_grade, derived));
                if (!result.width_met) {
                    err << "width contract missed: achieved " << blockade.width() << ", required " << result.claimed_width << "\n";
                    status = 1;
                }
            }
            if (row.verified_grade == "refuted")
                status = 1;
            row.wall_ms = output.timing ? clock.ms() : "";
            emit.rows(kHeader, {csv(row)});
            return status;
        }

        if (restrict->parsed() || eh->parsed()) {
            const bool is_eh = eh->parsed();
            params["command"] = is_eh ? "near-eh" : "restrict";
            source.describe(params);
            params["k"] = k;
            params["alpha"] = to_string(alpha);
            Rational epsilon;
            if (!is_eh) {
                epsilon = rational_arg(epsilon_text, "epsilon");
                params["epsilon"] = to_string(epsilon);
            }
            flags.describe(params);
            Row row = base_row(params, g, source.seed);
            row.k = std::to_string(k);
            row.s = std::to_string(level_for_alpha(alpha));
            row.mode = flags.mode;
            try {
                if (!is_eh) {
                    const auto result = near_rodl(g, k, alpha, epsilon, options);
                    const auto & set = result.transfer.set;
                    Json derived = Json::object();
                    derived["route"] = result.transfer.route;
                    derived["depth"] = result.transfer.depth;
                    derived["target"] = result.transfer.target;
                    derived["below_target"] = result.transfer.below_target;
                    row.epsilon = to_string(epsilon);
                    row.outcome_type = "restricted_set";
                    row.achieved_size = std::to_string(set.members.size());
                    row.target_size = number(result.transfer.target);
                    row.verified_grade = verify_restricted(g, set) ? "exact" : "refuted";
                    emit.certificate(certificate_to_json(set, params, row.verified_grade, derived));
                } else {
                    const auto result = near_eh(g, k, alpha, options);
                    Json derived = Json::object();
                    derived["route"] = result.route;
                    derived["bound"] = result.bound;
                    derived["theorem_size"] = result.theorem_size;
                    if (!result.theorem_note.empty())
                        derived["theorem_note"] = result.theorem_note;
                    if (result.best_epsilon != 0)
                        derived["epsilon"] = to_string(result.best_epsilon);
                    row.outcome_type = "homogeneous_set";
                    row.achieved_size = std::to_string(result.set.members.size());
                    row.target_size = std::to_string(static_cast<std::int64_t>(std::ceil(result.bound - 1e-9)));
                    row.verified_grade = verify_homogeneous(g, result.set) ? "exact" : "refuted";
                    emit.certificate(certificate_to_json(result.set, params, row.verified_grade, derived));
                }
            } catch (PathFound & found) {
                emit.certificate(path_certificate(params, found.path));
                err << "error: input is not P_" << k << "-free; witness:";
                for (Vertex v : found.path)
                    err << " " << v;
                err << "\n";
                return 1;
            }
            row.wall_ms = output.timing ? clock.ms() : "";
            emit.rows(kHeader, {csv(row)});
            return row.verified_grade == "exact" ? 0 : 1;
        }
    } catch (UsageError & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (ParseError & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (DomainError & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (std::exception & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace pathfree
