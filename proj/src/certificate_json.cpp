#include "pathfree/certificate_json.hpp"

#include "pathfree/errors.hpp"

namespace pathfree {

namespace {
    Json ids(const VertexSet & s)
    {
        return Json(s.members());
    }

    Json ids(const std::vector<Vertex> & v)
    {
        return Json(v);
    }

    struct Emitter {
        Json & out;

        void operator()(const RestrictedSet & c)
        {
            out["mode"] = to_string(c.mode);
            out["epsilon"] = to_string(c.epsilon);
            out["members"] = ids(c.members);
        }
        void operator()(const Blockade & c)
        {
            out["kind"] = to_string(c.kind);
            out["x"] = to_string(c.x);
            out["degenerate"] = c.degenerate;
            out["length"] = c.length();
            out["width"] = c.width();
            Json blocks = Json::array();
            for (auto & b : c.blocks)
                blocks.push_back(ids(b));
            out["blocks"] = std::move(blocks);
        }
        void operator()(const PathWitness & c)
        {
            out["vertices"] = ids(c.vertices);
        }
        void operator()(const HomogeneousSet & c)
        {
            out["kind"] = to_string(c.kind);
            out["members"] = ids(c.members);
        }
        void operator()(const DenseCoreClaim & c)
        {
            out["x"] = to_string(c.x);
            out["y"] = to_string(c.y);
            out["members"] = ids(c.members);
        }
        void operator()(const Brush & c)
        {
            out["x"] = to_string(c.x);
            out["y"] = to_string(c.y);
            out["t"] = c.t();
            out["path"] = ids(c.path.vertices);
            out["a"] = ids(c.a);
            out["b"] = ids(c.b);
        }
    };

    const char * type_name(const Certificate & cert)
    {
        static const char * names[] = {"restricted_set", "blockade", "path_witness", "homogeneous_set", "dense_core_claim", "brush"};
        return names[cert.index()];
    }

    const Json & field(const Json & j, const char * key)
    {
        if (!j.is_object() || !j.contains(key))
            throw ParseError(0, std::string("certificate lacks field '") + key + "'");
        return j.at(key);
    }

    std::vector<Vertex> vertex_list(const Json & j, const char * key)
    {
        const Json & list = field(j, key);
        if (!list.is_array())
            throw ParseError(0, std::string("field '") + key + "' is not an array");
        std::vector<Vertex> out;
        for (auto & v : list) {
            if (!v.is_number_unsigned())
                throw ParseError(0, std::string("field '") + key + "' holds a non-vertex entry");
            out.push_back(v.get<Vertex>());
        }
        return out;
    }

    VertexSet vertex_set(const Json & j, const char * key)
    {
        try {
            return VertexSet(vertex_list(j, key));
        } catch (DomainError & e) {
            throw ParseError(0, std::string("field '") + key + "': " + e.what());
        }
    }

    Rational rational(const Json & j, const char * key)
    {
        const Json & v = field(j, key);
        if (!v.is_string())
            throw ParseError(0, std::string("field '") + key + "' is not a rational string");
        return parse_rational(v.get<std::string>());
    }

    std::string text(const Json & j, const char * key)
    {
        const Json & v = field(j, key);
        if (!v.is_string())
            throw ParseError(0, std::string("field '") + key + "' is not a string");
        return v.get<std::string>();
    }

    std::int64_t param(const Json & j, const char * key, std::int64_t fallback)
    {
        if (!j.contains("params") || !j["params"].contains(key))
            return fallback;
        const Json & v = j["params"][key];
        if (!v.is_number_integer())
            throw ParseError(0, std::string("params.") + key + " is not an integer");
        return v.get<std::int64_t>();
    }
}

Json certificate_to_json(const Certificate & cert, Json params, const std::string & grade, Json derived)
{
    Json out = Json::object();
    out["type"] = type_name(cert);
    out["params"] = std::move(params);
    std::visit(Emitter{out}, cert);
    out["verification_grade"] = grade;
    out["derived"] = std::move(derived);
    return out;
}

Certificate certificate_from_json(const Json & j)
{
    const std::string type = text(j, "type");
    if (type == "restricted_set") {
        const std::string mode = text(j, "mode");
        if (mode != "sparse" && mode != "dense")
            throw ParseError(0, "unknown mode '" + mode + "'");
        return RestrictedSet{vertex_set(j, "members"), rational(j, "epsilon"), mode == "sparse" ? Mode::sparse : Mode::dense};
    }
    if (type == "blockade") {
        Blockade b;
        const std::string kind = text(j, "kind");
        if (kind == "x_sparse")
            b.kind = BlockadeKind::x_sparse;
        else if (kind == "one_minus_x_dense")
            b.kind = BlockadeKind::one_minus_x_dense;
        else if (kind == "complete")
            b.kind = BlockadeKind::complete;
        else if (kind == "anticomplete")
            b.kind = BlockadeKind::anticomplete;
        else
            throw ParseError(0, "unknown blockade kind '" + kind + "'");
        b.x = rational(j, "x");
        b.degenerate = j.value("degenerate", false);
        const Json & blocks = field(j, "blocks");
        if (!blocks.is_array())
            throw ParseError(0, "field 'blocks' is not an array");
        for (auto & block : blocks) {
            Json wrapper{{"block", block}};
            b.blocks.push_back(vertex_set(wrapper, "block"));
        }
        return b;
    }
    if (type == "path_witness")
        return PathWitness{vertex_list(j, "vertices")};
    if (type == "homogeneous_set") {
        const std::string kind = text(j, "kind");
        if (kind != "clique" && kind != "stable")
            throw ParseError(0, "unknown homogeneous kind '" + kind + "'");
        return HomogeneousSet{vertex_set(j, "members"), kind == "clique" ? HomogeneousKind::clique : HomogeneousKind::stable};
    }
    if (type == "dense_core_claim")
        return DenseCoreClaim{vertex_set(j, "members"), rational(j, "x"), rational(j, "y")};
    if (type == "brush")
        return Brush{PathWitness{vertex_list(j, "path")}, vertex_set(j, "a"), vertex_set(j, "b"), rational(j, "x"), rational(j, "y")};
    throw ParseError(0, "unknown certificate type '" + type + "'");
}

CertificateCheck check_certificate(const Graph & g, const Json & j)
{
    const Certificate cert = certificate_from_json(j);
    CertificateCheck out;
    auto take = [&](const Verdict & v, const char * grade) {
        out.ok = v.ok;
        out.reason = v.reason;
        out.grade = v.ok ? grade : "refuted";
    };
    auto in_graph = [&](const VertexSet & s) { return s.empty() || s.members().back() < g.n(); };

    if (auto * c = std::get_if<RestrictedSet>(&cert)) {
        if (!in_graph(c->members))
            take(Verdict::fail("a member is not a vertex of the graph"), "exact");
        else
            take(verify_restricted(g, *c), "exact");
    } else if (auto * c = std::get_if<Blockade>(&cert)) {
        take(verify_blockade(g, *c, static_cast<std::size_t>(param(j, "min_length", 0)),
                 static_cast<std::size_t>(param(j, "min_width", 0))),
            "exact");
    } else if (auto * c = std::get_if<PathWitness>(&cert)) {
        take(verify_path_witness(g, *c, static_cast<std::size_t>(param(j, "k", static_cast<std::int64_t>(c->vertices.size())))), "exact");
    } else if (auto * c = std::get_if<HomogeneousSet>(&cert)) {
        if (!in_graph(c->members))
            take(Verdict::fail("a member is not a vertex of the graph"), "exact");
        else
            take(verify_homogeneous(g, *c), "exact");
    } else if (auto * c = std::get_if<DenseCoreClaim>(&cert)) {
        if (!in_graph(c->members)) {
            take(Verdict::fail("a member is not a vertex of the graph"), "exact");
        } else {
            const auto verdict = verify_dense_core(g, *c, static_cast<std::size_t>(param(j, "samples", 1000)),
                static_cast<std::uint64_t>(param(j, "seed", 0)));
            out.ok = verdict.ok();
            out.grade = verdict.status == DenseCoreVerdict::Status::verified_exact ? "exhaustive"
                : verdict.ok()                                                     ? "sampled"
                                                                                   : "refuted";
            if (!verdict.ok())
                out.reason = "a subset of " + std::to_string(verdict.witness->size()) + " vertices is denser than 1 - y^3";
        }
    } else if (auto * c = std::get_if<Brush>(&cert)) {
        BrushCheckOptions options;
        options.samples = static_cast<std::size_t>(param(j, "samples", 64));
        options.seed = static_cast<std::uint64_t>(param(j, "seed", 0));
        const auto verdict = verify_brush(g, *c, param(j, "min_y", 1), options);
        out.ok = verdict.ok() && verdict.bullet4 != CheckGrade::refuted;
        out.reason = verdict.exact.reason;
        out.grade = !out.ok ? "refuted" : to_string(verdict.bullet4);
        if (verdict.ok() && !out.ok)
            out.reason = "bullet 4: a subset Y of B of size " + std::to_string(verdict.bullet4_counterexample->size())
                + " has too few vertices of A with x|Y| non-neighbours in it";
    }
    return out;
}

} // namespace pathfree
