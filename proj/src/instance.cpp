#include "influence/instance.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "influence/errors.hpp"

namespace influence {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

long parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long value = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long n = 0, m = 0;
    GraphBuilder builder;
    std::vector<int> thresholds;
    std::vector<char> threshold_seen;
    long edges_seen = 0;
    std::optional<int> directive_k, directive_ell;
    std::optional<ThresholdScheme> directive_scheme;
    int directive_constant_cap = 0;
    int scheme_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];

        if (kind == "c") {
            // Comment; a few directives restore fields the core format
            // cannot carry.
            if (tokens.size() == 3 && tokens[1] == "k")
                directive_k = static_cast<int>(parse_int(tokens[2], lineno, "k"));
            else if (tokens.size() == 3 && tokens[1] == "ell")
                directive_ell = static_cast<int>(parse_int(tokens[2], lineno, "ell"));
            else if (tokens.size() >= 3 && tokens[1] == "scheme") {
                scheme_line = lineno;
                if (tokens[2] == "general")
                    directive_scheme = ThresholdScheme::General;
                else if (tokens[2] == "majority")
                    directive_scheme = ThresholdScheme::Majority;
                else if (tokens[2] == "unanimity")
                    directive_scheme = ThresholdScheme::Unanimity;
                else if (tokens[2] == "constant" && tokens.size() == 4) {
                    directive_scheme = ThresholdScheme::Constant;
                    directive_constant_cap =
                        static_cast<int>(parse_int(tokens[3], lineno, "constant cap"));
                }
                // Unknown scheme comments are ignored like any other comment.
            }
            continue;
        }

        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header line");
            if (tokens.size() != 4 || tokens[1] != "influence")
                throw ParseError(lineno, "malformed header, expected 'p influence <n> <m>'");
            n = parse_int(tokens[2], lineno, "vertex count");
            m = parse_int(tokens[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            have_header = true;
            builder.add_vertices(static_cast<int>(n));
            thresholds.assign(static_cast<std::size_t>(n), 0);
            threshold_seen.assign(static_cast<std::size_t>(n), 0);
            continue;
        }

        if (!have_header) throw ParseError(lineno, "'" + kind + "' line before header");

        if (kind == "t") {
            if (tokens.size() != 3) throw ParseError(lineno, "malformed threshold line");
            long v = parse_int(tokens[1], lineno, "vertex index");
            long theta = parse_int(tokens[2], lineno, "threshold");
            if (v < 0 || v >= n)
                throw ParseError(lineno, "threshold line for unknown vertex " + std::to_string(v));
            if (threshold_seen[v])
                throw ParseError(lineno, "duplicate threshold for vertex " + std::to_string(v));
            if (theta < 0) throw ParseError(lineno, "negative threshold");
            thresholds[v] = static_cast<int>(theta);
            threshold_seen[v] = 1;
            continue;
        }

        if (kind == "e") {
            if (tokens.size() != 3) throw ParseError(lineno, "malformed edge line");
            long u = parse_int(tokens[1], lineno, "edge endpoint");
            long v = parse_int(tokens[2], lineno, "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "vertex index out of range in edge {" + std::to_string(u) +
                                             ", " + std::to_string(v) + "}");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            if (builder.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
                throw ParseError(lineno, "duplicate edge {" + std::to_string(u) + ", " +
                                             std::to_string(v) + "}");
            builder.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            ++edges_seen;
            continue;
        }

        throw ParseError(lineno, "unknown line kind '" + kind + "'");
    }

    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header line");
    if (edges_seen != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges but " +
                                     std::to_string(edges_seen) + " were given");
    for (long v = 0; v < n; ++v)
        if (!threshold_seen[v])
            throw ParseError(lineno, "missing threshold for vertex " + std::to_string(v));

    Instance inst;
    inst.graph = builder.freeze();
    inst.thresholds.values = std::move(thresholds);
    if (directive_scheme) {
        inst.thresholds.scheme = *directive_scheme;
        inst.thresholds.constant_cap = directive_constant_cap;
        if (!scheme_invariant_holds(inst.graph, inst.thresholds))
            throw ParseError(scheme_line, "threshold values violate the declared scheme");
    } else {
        inst.thresholds.scheme = infer_scheme(inst.graph, inst.thresholds.values);
    }
    if (directive_k) {
        if (*directive_k < 0 || *directive_k > n)
            throw ParseError(lineno, "budget k outside [0, n]");
        inst.k = *directive_k;
    }
    if (directive_ell) {
        // ell may exceed n: generated decision instances use unreachable
        // targets to encode trivially negative cases.
        if (*directive_ell < 0) throw ParseError(lineno, "negative target ell");
        inst.ell = *directive_ell;
    }
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    const Graph& g = inst.graph;
    out << "p influence " << g.vertex_count() << " " << g.edge_count() << "\n";
    if (inst.thresholds.scheme != ThresholdScheme::General)
        out << "c scheme " << scheme_name(inst.thresholds) << "\n";
    if (inst.k > 0) out << "c k " << inst.k << "\n";
    if (inst.ell) out << "c ell " << *inst.ell << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "t " << v << " " << inst.thresholds.value(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << serialize_instance(inst);
}

bool instances_equal(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.thresholds.values == b.thresholds.values &&
           a.thresholds.scheme == b.thresholds.scheme &&
           a.thresholds.constant_cap == b.thresholds.constant_cap && a.k == b.k && a.ell == b.ell;
}

}  // namespace influence
