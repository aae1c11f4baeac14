#include "bsmg/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "bsmg/cache.hpp"
#include "bsmg/defect.hpp"
#include "bsmg/errors.hpp"

namespace bsmg {

namespace {

using nlohmann::json;

Word parse_word(const std::string& text) {
    Word out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad word component '" + item + "'");
        }
    }
    return out;
}

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

json laurent_json(const LaurentPoly& f) {
    json coeffs = json::object();
    for (const auto& [e, c] : f.terms()) coeffs[std::to_string(e)] = c;
    return json{{"display", f.str()}, {"coeffs", coeffs}};
}

json poly_json(const MultiPoly& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms()) {
        json t;
        t["exps"] = f.unpack(key);
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    json vars = json::array();
    for (int v = 0; v + 1 < f.nvars(); ++v) vars.push_back("w" + std::to_string(v + 1));
    vars.push_back("d");
    return json{{"vars", vars}, {"terms", terms}};
}

json hecke_json(WeylGroup& group, const HeckeElement& h) {
    json terms = json::array();
    for (const auto& [x, c] : h) {
        json coeffs = json::object();
        for (const auto& [e, cc] : c.terms()) coeffs[std::to_string(e)] = cc;
        terms.push_back(json{{"word", group.word_str(x)}, {"coeff", coeffs}});
    }
    return json{{"basis", "H"}, {"terms", terms}};
}

std::string tilt_name(Tilt t) {
    switch (t) {
    case Tilt::Vertical: return "vertical";
    case Tilt::Left: return "left";
    case Tilt::Right: return "right";
    }
    return "?";
}

json tree_json(WeylGroup& group, const SubwordTree& tree) {
    json vertices = json::array();
    json edges = json::array();
    std::string dot = "digraph T {\n";
    int counter = 0;
    // Depth-first, children left to right; ids follow discovery order.
    struct Frame {
        const TreeNode* node;
        int id;
    };
    std::vector<Frame> stack;
    if (!tree.empty()) {
        stack.push_back({tree.root().get(), counter++});
        vertices.push_back(json{{"id", 0},
                                {"ev", group.word_str(tree.root()->ev)},
                                {"level", tree.root()->level}});
        dot += "  v0 [label=\"" + group.word_str(tree.root()->ev) + "\"];\n";
    }
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (const auto& child : f.node->children) {
            int id = counter++;
            vertices.push_back(json{{"id", id},
                                    {"ev", group.word_str(child.node->ev)},
                                    {"level", child.node->level}});
            edges.push_back(json{{"from", id},
                                 {"to", f.id},
                                 {"level", child.edge.level},
                                 {"root", child.edge.simple_index},
                                 {"color", child.edge.color},
                                 {"tilt", tilt_name(child.edge.tilt)}});
            dot += "  v" + std::to_string(id) + " [label=\"" +
                   group.word_str(child.node->ev) + "\"];\n";
            dot += "  v" + std::to_string(id) + " -> v" + std::to_string(f.id) +
                   " [label=\"" + std::to_string(child.edge.color) + "," +
                   tilt_name(child.edge.tilt) + "\"];\n";
            stack.push_back({child.node.get(), id});
        }
    }
    dot += "}\n";
    return json{{"vertices", vertices}, {"edges", edges}, {"dot", dot}};
}

json run_command(const RunConfig& cfg) {
    RootSystem roots(cfg.type, cfg.rank, cfg.affine);
    WeylGroup group(roots);
    Word word = parse_word(cfg.word);
    auto target = [&]() { return group.ev_word(parse_word(cfg.target)); };

    if (cfg.command == "roots") {
        json pos = json::array();
        for (const auto& beta : roots.positive_roots())
            pos.push_back(roots.make_root(beta, 0).str());
        json simples = json::array();
        for (const auto& beta : roots.affine_simple_system()) simples.push_back(beta.str());
        return json{{"type", std::string(1, cfg.type)},
                    {"rank", cfg.rank},
                    {"affine", cfg.affine},
                    {"cartan", roots.cartan()},
                    {"positive_roots", pos},
                    {"highest_root", roots.make_root(roots.highest_root(), 0).str()},
                    {"simple_system", simples}};
    }
    if (cfg.command == "group") {
        ElementId w = group.ev_word(word);
        json elems = json::array();
        for (ElementId x : group.bruhat_interval(w))
            elems.push_back(json{{"word", group.word_str(x)}, {"length", group.length(x)}});
        return json{{"top", group.word_str(w)}, {"count", elems.size()}, {"elements", elems}};
    }
    if (cfg.command == "gkm") {
        ElementId w = group.ev_word(word);
        MomentGraph g = MomentGraph::build_interval(group, w, cfg.characteristic);
        auto report = g.gkm_check();
        json violations = json::array();
        for (const auto& v : report)
            violations.push_back(json{{"vertex", group.word_str(v.vertex)},
                                      {"label_a", g.edges()[v.edge_a].label.str()},
                                      {"label_b", g.edges()[v.edge_b].label.str()}});
        json vertices = json::array();
        for (ElementId x : g.vertices())
            vertices.push_back(json{{"word", group.word_str(x)}, {"length", group.length(x)}});
        json edges = json::array();
        for (const auto& e : g.edges()) {
            json image = json::array();
            for (const auto& c : e.label_image) image.push_back(c.str());
            edges.push_back(json{{"from", group.word_str(e.from)},
                                 {"to", group.word_str(e.to)},
                                 {"label_root", e.label.root_coords},
                                 {"label_level", e.label.level},
                                 {"label_image", image}});
        }
        return json{{"gkm", report.empty()},
                    {"violations", violations},
                    {"vertices", vertices},
                    {"edges", edges}};
    }
    if (cfg.command == "tree") {
        SubwordTree tree(group, word, target());
        return tree_json(group, tree);
    }
    if (cfg.command == "grk") {
        return json{{"grk", laurent_json(graded_rank(group, word, target()))}};
    }
    if (cfg.command == "phi") {
        PhiMatrix phi = phi_matrix(group, word, target(), cfg.characteristic);
        json rows = json::array();
        for (const auto& row : phi.entries) {
            json r = json::array();
            for (const auto& entry : row) r.push_back(poly_json(entry));
            rows.push_back(r);
        }
        return json{{"entries", rows},
                    {"stalk_degrees", phi.stalk_degrees},
                    {"kernel_degrees", phi.kernel_degrees}};
    }
    if (cfg.command == "defect") {
        return json{{"defect", laurent_json(defect_at(group, word, target(), cfg.characteristic))}};
    }
    if (cfg.command == "decompose") {
        ElementId w = group.ev_word(word);
        bool reduced = group.length(w) == static_cast<int>(word.size());
        if (!reduced && !cfg.allow_nonreduced)
            throw UsageError("word is not reduced; pass --allow-nonreduced to proceed");
        Decomposition dec = decompose(group, word, cfg.characteristic);
        json summands = json::array();
        for (const Summand& s : dec)
            summands.push_back(json{{"z", group.word_str(s.z)},
                                    {"r", s.shift},
                                    {"mult", s.multiplicity}});
        json out{{"summands", summands}};
        if (!reduced) out["experimental"] = true;
        return out;
    }
    if (cfg.command == "character") {
        BMCache cache;
        ElementId w = group.ev_word(word);
        const auto& table = bm_character(group, w, cfg.characteristic, cache);
        json rows = json::array();
        for (const auto& [x, g] : table)
            rows.push_back(json{{"x", group.word_str(x)}, {"grk", laurent_json(g)}});
        return json{{"w", group.word_str(w)}, {"characters", rows}};
    }
    if (cfg.command == "kl") {
        KLTable table;
        ElementId w = group.ev_word(word);
        return hecke_json(group, kl_element(group, w, table));
    }
    if (cfg.command == "census") {
        if (cfg.affine)
            throw UsageError("census requires a finite type");
        int count = census(cfg.type, cfg.rank, cfg.n, cfg.threads);
        return json{{"type", std::string(1, cfg.type)},
                    {"rank", cfg.rank},
                    {"n", cfg.n},
                    {"count", count}};
    }
    throw UsageError("unknown command '" + cfg.command + "'");
}

} // namespace

RunResult dispatch(const RunConfig& cfg) {
    try {
        if (cfg.characteristic != 0 && !is_odd_prime(cfg.characteristic))
            throw UsageError("characteristic must be 0 or an odd prime");
        if (cfg.command.empty())
            throw UsageError("no command given");

        std::string cache_dir = cfg.cache_dir;
        if (cache_dir.empty())
            if (const char* env = std::getenv("CACHE_DIR")) cache_dir = env;

        std::string key;
        std::optional<ResultCache> cache;
        if (!cache_dir.empty()) {
            std::ostringstream k;
            k << kToolVersion << "|" << cfg.type << cfg.rank << "|affine=" << cfg.affine
              << "|char=" << cfg.characteristic << "|" << cfg.command << "|w=" << cfg.word
              << "|x=" << cfg.target << "|n=" << cfg.n
              << "|nonred=" << cfg.allow_nonreduced;
            key = k.str();
            cache.emplace(cache_dir);
            if (!cfg.verify_cache) {
                if (auto hit = cache->get(key))
                    return {*hit, 0};
            }
        }

        json out = run_command(cfg);
        std::string text = cfg.pretty ? out.dump(2) : out.dump();
        text += "\n";
        if (cache) {
            if (cfg.verify_cache) {
                if (auto hit = cache->get(key); hit && *hit != text)
                    throw CacheError("cache entry differs from recomputation");
            }
            cache->put(key, text);
        }
        return {text, 0};
    } catch (const NonGKMInput& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        return {err.dump() + "\n", 2};
    } catch (const Error& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        return {err.dump() + "\n", 1};
    } catch (const std::exception& e) {
        json err{{"error", "Internal"}, {"message", e.what()}};
        return {err.dump() + "\n", 1};
    }
}

} // namespace bsmg
