#include "kron/netlist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace kron {

namespace {

struct EdgeStanza {
    int line = 0;
    int id = 0, tail = 0, head = 0;
    double r = 0.0, l = 0.0, c = 0.0;
    Complex emf{0.0, 0.0};
    double emf_magnitude = 0.0, emf_phase_deg = 0.0;
    bool has_emf = false;
};

struct JSourceStanza {
    int line = 0;
    int edge = 0;
    double amps = 0.0;
};

struct MutualStanza {
    int line = 0;
    int mesh_i = 0, mesh_j = 0;
    double u = 0.0;
};

struct BraninStanza {
    int line = 0;
    int edge_left = 0, edge_right = 0;
    double zc = 0.0, tau = 0.0;
};

struct ApertureStanza {
    int line = 0;
    int edge = 0;
    double we = 0.0, b = 0.0;
};

struct FarFieldStanza {
    int line = 0;
    int mesh_t = 0, mesh_r = 0;
    double r11 = 0.0, r22 = 0.0, at = 0.0, ar = 0.0, r = 0.0;
};

struct ReflectionStanza {
    int line = 0;
    int mesh = 0;
    double g = 0.0, r = 0.0, sigma = 0.0, rr = 0.0, phase = 1.0;
};

struct ProbeStanza {
    int line = 0;
    Probe probe;
    int target_id = 0;  // 1-based edge or closing-edge id, se probes unused
};

struct Document {
    std::vector<int> vertices;
    std::vector<EdgeStanza> edges;
    std::vector<JSourceStanza> jsources;
    std::vector<MutualStanza> mutuals;
    std::vector<BraninStanza> branins;
    std::vector<ApertureStanza> apertures;
    std::vector<FarFieldStanza> farfields;
    std::vector<ReflectionStanza> reflections;
    std::vector<ProbeStanza> probes;
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

double parse_double(const std::string& text, int line) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + text + "'");
    }
    if (used != text.size()) throw ParseError(line, "trailing characters in number '" + text + "'");
    return value;
}

int parse_int(const std::string& text, int line) {
    size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + text + "'");
    }
    if (used != text.size()) throw ParseError(line, "trailing characters in integer '" + text + "'");
    return static_cast<int>(value);
}

/// key=value arguments with a fixed key set; returns the values found.
std::map<std::string, std::string> parse_kv(const std::vector<std::string>& tokens, size_t first,
                                            const std::set<std::string>& allowed, int line) {
    std::map<std::string, std::string> kv;
    for (size_t i = first; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        if (!allowed.count(key)) throw ParseError(line, "unknown parameter '" + key + "'");
        if (kv.count(key)) throw ParseError(line, "duplicate parameter '" + key + "'");
        kv[key] = tok.substr(eq + 1);
    }
    return kv;
}

double require(const std::map<std::string, std::string>& kv, const std::string& key, int line) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(line, "missing required parameter '" + key + "'");
    return parse_double(it->second, line);
}

Document read_document(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const auto tokens = split_tokens(raw);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];

        if (kind == "vertex") {
            if (tokens.size() != 2) throw ParseError(line_no, "vertex takes one id");
            doc.vertices.push_back(parse_int(tokens[1], line_no));
        } else if (kind == "edge") {
            if (tokens.size() < 4) throw ParseError(line_no, "edge takes <id> <tail> <head>");
            EdgeStanza e;
            e.line = line_no;
            e.id = parse_int(tokens[1], line_no);
            e.tail = parse_int(tokens[2], line_no);
            e.head = parse_int(tokens[3], line_no);
            auto kv = parse_kv(tokens, 4, {"R", "L", "C", "emf"}, line_no);
            if (kv.count("R")) e.r = parse_double(kv["R"], line_no);
            if (kv.count("L")) e.l = parse_double(kv["L"], line_no);
            if (kv.count("C")) e.c = parse_double(kv["C"], line_no);
            if (kv.count("emf")) {
                e.has_emf = true;
                std::string value = kv["emf"];
                auto at = value.find('@');
                e.emf_magnitude = parse_double(at == std::string::npos ? value : value.substr(0, at),
                                               line_no);
                e.emf_phase_deg =
                    at == std::string::npos ? 0.0 : parse_double(value.substr(at + 1), line_no);
                const double rad = e.emf_phase_deg * std::numbers::pi / 180.0;
                e.emf = e.emf_magnitude * Complex{std::cos(rad), std::sin(rad)};
            }
            if (e.r < 0.0 || e.l < 0.0 || e.c < 0.0)
                throw ParseError(line_no, "R, L and C must be non-negative");
            doc.edges.push_back(e);
        } else if (kind == "jsource") {
            if (tokens.size() != 3) throw ParseError(line_no, "jsource takes <edge> <amps>");
            doc.jsources.push_back(
                {line_no, parse_int(tokens[1], line_no), parse_double(tokens[2], line_no)});
        } else if (kind == "mutual") {
            if (tokens.size() != 4) throw ParseError(line_no, "mutual takes <mesh_i> <mesh_j> u=");
            auto kv = parse_kv(tokens, 3, {"u"}, line_no);
            doc.mutuals.push_back({line_no, parse_int(tokens[1], line_no),
                                   parse_int(tokens[2], line_no), require(kv, "u", line_no)});
        } else if (kind == "branin") {
            if (tokens.size() != 5)
                throw ParseError(line_no, "branin takes <edgeL> <edgeR> Zc= tau=");
            auto kv = parse_kv(tokens, 3, {"Zc", "tau"}, line_no);
            BraninStanza b;
            b.line = line_no;
            b.edge_left = parse_int(tokens[1], line_no);
            b.edge_right = parse_int(tokens[2], line_no);
            b.zc = require(kv, "Zc", line_no);
            b.tau = require(kv, "tau", line_no);
            if (b.zc <= 0.0) throw ParseError(line_no, "Zc must be positive");
            if (b.tau < 0.0) throw ParseError(line_no, "tau must be non-negative");
            doc.branins.push_back(b);
        } else if (kind == "aperture") {
            if (tokens.size() != 4) throw ParseError(line_no, "aperture takes <edge> we= b=");
            auto kv = parse_kv(tokens, 2, {"we", "b"}, line_no);
            ApertureStanza a;
            a.line = line_no;
            a.edge = parse_int(tokens[1], line_no);
            a.we = require(kv, "we", line_no);
            a.b = require(kv, "b", line_no);
            if (a.b <= 0.0 || a.we <= 0.0 || a.we / a.b >= 1.0)
                throw ParseError(line_no, "aperture ratio we/b must lie strictly inside (0, 1)");
            doc.apertures.push_back(a);
        } else if (kind == "farfield") {
            if (tokens.size() != 8)
                throw ParseError(line_no, "farfield takes <mesh_t> <mesh_r> R11= R22= At= Ar= r=");
            auto kv = parse_kv(tokens, 3, {"R11", "R22", "At", "Ar", "r"}, line_no);
            FarFieldStanza f;
            f.line = line_no;
            f.mesh_t = parse_int(tokens[1], line_no);
            f.mesh_r = parse_int(tokens[2], line_no);
            f.r11 = require(kv, "R11", line_no);
            f.r22 = require(kv, "R22", line_no);
            f.at = require(kv, "At", line_no);
            f.ar = require(kv, "Ar", line_no);
            f.r = require(kv, "r", line_no);
            if (f.r <= 0.0) throw ParseError(line_no, "farfield distance r must be positive");
            doc.farfields.push_back(f);
        } else if (kind == "reflection") {
            if (tokens.size() < 6)
                throw ParseError(line_no, "reflection takes <mesh> G= R= sigma= Rr= [phase=]");
            auto kv = parse_kv(tokens, 2, {"G", "R", "sigma", "Rr", "phase"}, line_no);
            ReflectionStanza w;
            w.line = line_no;
            w.mesh = parse_int(tokens[1], line_no);
            w.g = require(kv, "G", line_no);
            w.r = require(kv, "R", line_no);
            w.sigma = require(kv, "sigma", line_no);
            w.rr = require(kv, "Rr", line_no);
            if (kv.count("phase")) w.phase = parse_double(kv.at("phase"), line_no);
            if (w.phase != 1.0 && w.phase != -1.0)
                throw ParseError(line_no, "phase must be +1 or -1");
            if (w.r <= 0.0 || w.rr <= 0.0)
                throw ParseError(line_no, "R and Rr must be positive");
            if (std::abs(w.sigma) > 1.0)
                throw ParseError(line_no, "|sigma| must not exceed 1");
            doc.reflections.push_back(w);
        } else if (kind == "probe") {
            if (tokens.size() < 4) throw ParseError(line_no, "probe takes <name> <kind> ...");
            ProbeStanza p;
            p.line = line_no;
            p.probe.name = tokens[1];
            const std::string& target = tokens[2];
            if (target == "edge") {
                if (tokens.size() != 5)
                    throw ParseError(line_no, "probe ... edge takes <id> current|voltage");
                p.target_id = parse_int(tokens[3], line_no);
                if (tokens[4] == "current")
                    p.probe.kind = Probe::Kind::EdgeCurrent;
                else if (tokens[4] == "voltage")
                    p.probe.kind = Probe::Kind::EdgeVoltage;
                else
                    throw ParseError(line_no, "edge probe quantity must be current or voltage");
            } else if (target == "mesh") {
                if (tokens.size() != 5 || tokens[4] != "current")
                    throw ParseError(line_no, "probe ... mesh takes <id> current");
                p.target_id = parse_int(tokens[3], line_no);
                p.probe.kind = Probe::Kind::MeshCurrent;
            } else if (target == "se") {
                if (tokens.size() != 5)
                    throw ParseError(line_no, "probe ... se takes <probe> <reference>");
                p.probe.kind = Probe::Kind::Shielding;
                p.probe.se_probe = tokens[3];
                p.probe.se_reference = tokens[4];
            } else {
                throw ParseError(line_no, "probe target must be edge, mesh or se");
            }
            doc.probes.push_back(p);
        } else {
            throw ParseError(line_no, "unknown stanza '" + kind + "'");
        }
    }
    return doc;
}

}  // namespace

NetworkProblem parse_netlist(const std::string& text) {
    const Document doc = read_document(text);

    // Vertex and edge ids must be 1..N contiguous.
    const int n_vertices = static_cast<int>(doc.vertices.size());
    std::set<int> vertex_ids(doc.vertices.begin(), doc.vertices.end());
    if (static_cast<int>(vertex_ids.size()) != n_vertices ||
        (n_vertices > 0 && (*vertex_ids.begin() != 1 || *vertex_ids.rbegin() != n_vertices)))
        throw ParseError(1, "vertex ids must be unique and contiguous from 1");

    const int n_edges = static_cast<int>(doc.edges.size());
    std::vector<Edge> edges(static_cast<size_t>(n_edges));
    std::vector<const EdgeStanza*> stanza_of_edge(static_cast<size_t>(n_edges), nullptr);
    for (const EdgeStanza& e : doc.edges) {
        if (e.id < 1 || e.id > n_edges)
            throw ParseError(e.line, "edge ids must be contiguous from 1");
        if (stanza_of_edge[static_cast<size_t>(e.id - 1)])
            throw ParseError(e.line, "duplicate edge id " + std::to_string(e.id));
        if (!vertex_ids.count(e.tail) || !vertex_ids.count(e.head))
            throw ParseError(e.line, "edge references an undeclared vertex");
        if (e.tail == e.head) throw ParseError(e.line, "self-loops are not allowed");
        edges[static_cast<size_t>(e.id - 1)] = Edge{e.id - 1, e.tail - 1, e.head - 1};
        stanza_of_edge[static_cast<size_t>(e.id - 1)] = &e;
    }

    NetworkProblem problem;
    problem.complex = CellComplex(n_vertices, std::move(edges));
    problem.tree = build_spanning_tree(problem.complex);
    problem.meshes = build_mesh_basis(problem.complex, problem.tree);

    auto resolve_edge = [&](int id, int line) {
        if (id < 1 || id > n_edges)
            throw ParseError(line, "edge " + std::to_string(id) + " does not exist");
        return id - 1;
    };
    auto resolve_mesh = [&](int closing_edge_id, int line) {
        const int mesh = problem.meshes.index_of_closing_edge(resolve_edge(closing_edge_id, line));
        if (mesh < 0)
            throw ParseError(line, "edge " + std::to_string(closing_edge_id) +
                                       " is not a closing edge, so it names no mesh");
        return mesh;
    };

    // Per-edge operators and emfs.
    problem.edge_metric = EdgeMetric(n_edges);
    problem.edge_emfs = Eigen::VectorXcd::Zero(n_edges);
    for (int e = 0; e < n_edges; ++e) {
        const EdgeStanza& s = *stanza_of_edge[static_cast<size_t>(e)];
        ImpedanceExpr& z = problem.edge_metric.diagonal(e);
        z.resistance = s.r;
        z.inductance = s.l;
        z.elastance = s.c > 0.0 ? 1.0 / s.c : 0.0;
        problem.edge_emfs(e) = s.emf;
    }
    for (const ApertureStanza& a : doc.apertures) {
        const int e = resolve_edge(a.edge, a.line);
        problem.edge_metric.diagonal(e).resistance += gupta_aperture_impedance(a.we, a.b);
        problem.apertures.push_back({e, ApertureModel{a.we, a.b}});
    }
    // Delay lines enter the edge metric as the two-port closed form of the
    // retarded-emf pair: coth on the port diagonals, csch across. Both
    // port edges are expected oriented from the line conductor toward the
    // common return.
    for (const BraninStanza& b : doc.branins) {
        const int left = resolve_edge(b.edge_left, b.line);
        const int right = resolve_edge(b.edge_right, b.line);
        if (left == right) throw ParseError(b.line, "branin ports must be distinct edges");
        problem.edge_metric.diagonal(left).line_terms.push_back(
            {LineTerm::Kind::Coth, b.zc, b.tau});
        problem.edge_metric.diagonal(right).line_terms.push_back(
            {LineTerm::Kind::Coth, b.zc, b.tau});
        problem.edge_metric.off_diagonal(left, right).line_terms.push_back(
            {LineTerm::Kind::Csch, b.zc, b.tau});
        problem.edge_metric.off_diagonal(right, left).line_terms.push_back(
            {LineTerm::Kind::Csch, b.zc, b.tau});
        problem.branin_lines.push_back(BraninLine{left, right, b.zc, b.tau});
    }

    // Current sources live on tree edges; anything else is a placement
    // error reported with its line.
    std::map<int, double> source_amps;
    for (const JSourceStanza& j : doc.jsources) {
        const int e = resolve_edge(j.edge, j.line);
        if (!problem.tree.is_tree_edge(e))
            throw ParseError(j.line, "jsource on edge " + std::to_string(j.edge) +
                                         " which is a closing edge, not a tree edge");
        if (source_amps.count(e))
            throw ParseError(j.line, "duplicate jsource on edge " + std::to_string(j.edge));
        source_amps[e] = j.amps;
    }
    std::vector<int> source_edges;
    for (const auto& [edge, amps] : source_amps) source_edges.push_back(edge);
    problem.connectivity =
        build_connectivity(problem.complex, problem.tree, problem.meshes, source_edges);
    problem.tree_injections.resize(static_cast<int>(source_edges.size()));
    for (size_t j = 0; j < source_edges.size(); ++j)
        problem.tree_injections(static_cast<int>(j)) = source_amps.at(source_edges[j]);

    for (const MutualStanza& m : doc.mutuals)
        problem.chords.push_back(MutualInductanceChord{resolve_mesh(m.mesh_i, m.line),
                                                       resolve_mesh(m.mesh_j, m.line), m.u});
    for (const FarFieldStanza& f : doc.farfields) {
        FarFieldLink link;
        link.mesh_transmit = resolve_mesh(f.mesh_t, f.line);
        link.mesh_receive = resolve_mesh(f.mesh_r, f.line);
        link.r11 = f.r11;
        link.r22 = f.r22;
        link.aperture_transmit = f.at;
        link.aperture_receive = f.ar;
        link.distance = f.r;
        problem.chords.push_back(link);
    }
    for (const ReflectionStanza& w : doc.reflections) {
        ReflectionLink link;
        link.mesh = resolve_mesh(w.mesh, w.line);
        link.gain = w.g;
        link.wall_distance = w.r;
        link.reflection_coefficient = w.sigma;
        link.radiation_resistance = w.rr;
        link.phase = w.phase;
        problem.chords.push_back(link);
    }

    std::set<std::string> probe_names;
    for (const ProbeStanza& p : doc.probes) {
        Probe probe = p.probe;
        if (!probe_names.insert(probe.name).second)
            throw ParseError(p.line, "duplicate probe name '" + probe.name + "'");
        switch (probe.kind) {
            case Probe::Kind::EdgeCurrent:
            case Probe::Kind::EdgeVoltage:
                probe.id = resolve_edge(p.target_id, p.line);
                break;
            case Probe::Kind::MeshCurrent:
                probe.id = resolve_mesh(p.target_id, p.line);
                break;
            case Probe::Kind::Shielding:
                break;
        }
        problem.probes.push_back(probe);
    }
    for (const Probe& probe : problem.probes) {
        if (probe.kind != Probe::Kind::Shielding) continue;
        for (const std::string& name : {probe.se_probe, probe.se_reference}) {
            bool found = false;
            for (const Probe& other : problem.probes)
                if (other.name == name && other.kind != Probe::Kind::Shielding) found = true;
            if (!found)
                throw ParseError(1, "se probe '" + probe.name +
                                        "' references unknown observable '" + name + "'");
        }
    }
    return problem;
}

NetworkProblem load_netlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open netlist '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_netlist(buffer.str());
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string format_netlist(const NetworkProblem& problem) {
    std::ostringstream out;
    for (int v = 0; v < problem.complex.vertex_count(); ++v) out << "vertex " << (v + 1) << "\n";

    std::map<int, double> aperture_r;
    for (const ApertureRecord& a : problem.apertures)
        aperture_r[a.edge] = gupta_aperture_impedance(a.model.effective_width, a.model.height);

    for (const Edge& e : problem.complex.edges()) {
        const ImpedanceExpr& z = problem.edge_metric.diagonal(e.id);
        out << "edge " << (e.id + 1) << " " << (e.tail + 1) << " " << (e.head + 1);
        double r = z.resistance;
        if (auto it = aperture_r.find(e.id); it != aperture_r.end()) r -= it->second;
        if (r != 0.0) out << " R=" << format_double(r);
        if (z.inductance != 0.0) out << " L=" << format_double(z.inductance);
        if (z.elastance != 0.0) out << " C=" << format_double(1.0 / z.elastance);
        const Complex emf = problem.edge_emfs(e.id);
        if (emf != Complex{0.0, 0.0}) {
            out << " emf=" << format_double(std::abs(emf));
            const double deg = std::arg(emf) * 180.0 / std::numbers::pi;
            if (deg != 0.0) out << "@" << format_double(deg);
        }
        out << "\n";
    }
    for (int j = 0; j < problem.connectivity.source_count(); ++j)
        out << "jsource " << (problem.connectivity.source_edges[static_cast<size_t>(j)] + 1) << " "
            << format_double(problem.tree_injections(j).real()) << "\n";
    for (const ApertureRecord& a : problem.apertures)
        out << "aperture " << (a.edge + 1) << " we=" << format_double(a.model.effective_width)
            << " b=" << format_double(a.model.height) << "\n";
    for (const BraninLine& b : problem.branin_lines)
        out << "branin " << (b.edge_left + 1) << " " << (b.edge_right + 1)
            << " Zc=" << format_double(b.characteristic_impedance)
            << " tau=" << format_double(b.delay) << "\n";

    auto closing_id = [&](int mesh) {
        return problem.meshes.meshes.at(static_cast<size_t>(mesh)).closing_edge + 1;
    };
    for (const ChordCoupling& chord : problem.chords) {
        if (const auto* m = std::get_if<MutualInductanceChord>(&chord)) {
            out << "mutual " << closing_id(m->mesh_i) << " " << closing_id(m->mesh_j)
                << " u=" << format_double(m->mutual) << "\n";
        } else if (const auto* f = std::get_if<FarFieldLink>(&chord)) {
            out << "farfield " << closing_id(f->mesh_transmit) << " " << closing_id(f->mesh_receive)
                << " R11=" << format_double(f->r11) << " R22=" << format_double(f->r22)
                << " At=" << format_double(f->aperture_transmit)
                << " Ar=" << format_double(f->aperture_receive) << " r=" << format_double(f->distance)
                << "\n";
        } else if (const auto* w = std::get_if<ReflectionLink>(&chord)) {
            out << "reflection " << closing_id(w->mesh) << " G=" << format_double(w->gain)
                << " R=" << format_double(w->wall_distance)
                << " sigma=" << format_double(w->reflection_coefficient)
                << " Rr=" << format_double(w->radiation_resistance);
            if (w->phase != 1.0) out << " phase=-1";
            out << "\n";
        }
        // DirectImpedanceChord has no netlist spelling; it is test plumbing.
    }
    for (const Probe& p : problem.probes) {
        out << "probe " << p.name << " ";
        switch (p.kind) {
            case Probe::Kind::EdgeCurrent:
                out << "edge " << (p.id + 1) << " current";
                break;
            case Probe::Kind::EdgeVoltage:
                out << "edge " << (p.id + 1) << " voltage";
                break;
            case Probe::Kind::MeshCurrent:
                out << "mesh " << closing_id(p.id) << " current";
                break;
            case Probe::Kind::Shielding:
                out << "se " << p.se_probe << " " << p.se_reference;
                break;
        }
        out << "\n";
    }
    return out.str();
}

std::string topology_report(const NetworkProblem& problem) {
    std::ostringstream out;
    const int b = problem.complex.edge_count();
    const int n = problem.complex.vertex_count();
    const int r = problem.tree.component_count;
    const int m = problem.mesh_count();
    out << "vertices N = " << n << ", edges B = " << b << ", components R = " << r
        << ", meshes M = B - N + R = " << m << "\n";
    out << "tree edges:";
    for (int e : problem.tree.tree_edges) out << " " << (e + 1);
    out << "\nclosing edges:";
    for (int e : problem.tree.closing_edges) out << " " << (e + 1);
    out << "\n";
    for (size_t i = 0; i < problem.meshes.meshes.size(); ++i) {
        const Mesh& mesh = problem.meshes.meshes[i];
        out << "mesh " << (mesh.closing_edge + 1) << " (index " << (i + 1) << "):";
        for (const SignedEdge& se : mesh.cycle)
            out << " " << (se.sign > 0 ? "+" : "-") << (se.edge + 1);
        out << "\n";
    }
    const ConnectivityMatrix& c = problem.connectivity;
    out << "connectivity C (" << c.rows() << " x " << c.cols() << "), rows tree-first, columns "
        << c.source_count() << " source(s) then " << c.mesh_count << " mesh(es):\n";
    for (int row = 0; row < c.rows(); ++row) {
        out << "  edge " << (c.edge_order[static_cast<size_t>(row)] + 1) << ":";
        for (int col = 0; col < c.cols(); ++col) {
            out << " " << c.entries(row, col);
            if (col + 1 == c.source_count() && c.mesh_count > 0) out << " |";
        }
        out << "\n";
        if (row + 1 == c.tree_count && c.rows() > c.tree_count) out << "  ----\n";
    }
    return out.str();
}

std::string csv_string(const SweepSolution& solution) {
    std::ostringstream out;
    out << "freq_hz";
    for (const std::string& name : solution.observable_names)
        out << "," << name << "_re," << name << "_im";
    out << "\n";
    for (size_t i = 0; i < solution.points.size(); ++i) {
        const SweepPoint& point = solution.points[i];
        const double f = i < solution.hertz.size() ? solution.hertz[i]
                                                   : solution.omegas[i] / (2.0 * std::numbers::pi);
        out << format_double(f);
        for (size_t o = 0; o < solution.observable_names.size(); ++o) {
            if (point.ok) {
                out << "," << format_double(point.observables[o].real()) << ","
                    << format_double(point.observables[o].imag());
            } else {
                out << ",nan,nan";
            }
        }
        out << "\n";
    }
    return out.str();
}

void write_csv(const SweepSolution& solution, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << csv_string(solution);
    if (!out) throw IoError("failed writing '" + path + "'");
}

void write_svg(const SweepSolution& solution, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    const double width = 960, height = 600, margin = 60;
    const size_t n = solution.points.size();

    double fmin = 0, fmax = 0, vmin = 0, vmax = 0;
    bool any = false;
    for (size_t i = 0; i < n; ++i) {
        if (!solution.points[i].ok) continue;
        const double f = i < solution.hertz.size() ? solution.hertz[i]
                                                   : solution.omegas[i] / (2.0 * std::numbers::pi);
        for (const Complex& v : solution.points[i].observables) {
            const double mag = std::abs(v);
            if (mag <= 0.0 || f <= 0.0) continue;
            if (!any) {
                fmin = fmax = f;
                vmin = vmax = mag;
                any = true;
            } else {
                fmin = std::min(fmin, f);
                fmax = std::max(fmax, f);
                vmin = std::min(vmin, mag);
                vmax = std::max(vmax, mag);
            }
        }
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (any && fmax > fmin && vmax > vmin) {
        auto x_of = [&](double f) {
            return margin + (std::log10(f) - std::log10(fmin)) /
                                (std::log10(fmax) - std::log10(fmin)) * (width - 2 * margin);
        };
        auto y_of = [&](double v) {
            return height - margin -
                   (std::log10(v) - std::log10(vmin)) / (std::log10(vmax) - std::log10(vmin)) *
                       (height - 2 * margin);
        };
        static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                       "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
        for (size_t o = 0; o < solution.observable_names.size(); ++o) {
            out << "<polyline fill=\"none\" stroke=\"" << colors[o % 8]
                << "\" stroke-width=\"1.5\" points=\"";
            for (size_t i = 0; i < n; ++i) {
                if (!solution.points[i].ok) continue;
                const double f = i < solution.hertz.size()
                                     ? solution.hertz[i]
                                     : solution.omegas[i] / (2.0 * std::numbers::pi);
                const double mag = std::abs(solution.points[i].observables[o]);
                if (f <= 0.0 || mag <= 0.0) continue;
                out << x_of(f) << "," << y_of(mag) << " ";
            }
            out << "\"/>\n";
            out << "<text x=\"" << (margin + 8) << "\" y=\"" << (margin + 16 + 16 * o)
                << "\" fill=\"" << colors[o % 8] << "\" font-size=\"13\">"
                << solution.observable_names[o] << "</text>\n";
        }
        out << "<line x1=\"" << margin << "\" y1=\"" << (height - margin) << "\" x2=\""
            << (width - margin) << "\" y2=\"" << (height - margin)
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
            << "\" y2=\"" << (height - margin) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << (width / 2) << "\" y=\"" << (height - margin / 3)
            << "\" font-size=\"13\" text-anchor=\"middle\">frequency (Hz, log)</text>\n";
        out << "<text x=\"" << (margin / 3) << "\" y=\"" << (height / 2)
            << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 " << (margin / 3)
            << " " << (height / 2) << ")\">|observable| (log)</text>\n";
    } else {
        out << "<text x=\"" << (width / 2) << "\" y=\"" << (height / 2)
            << "\" font-size=\"14\" text-anchor=\"middle\">no plottable data</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace kron
