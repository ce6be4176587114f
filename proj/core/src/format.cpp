#include "planarsep/format.hpp"

#include <fstream>
#include <sstream>

namespace planarsep {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    raise(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "bad integer '" + tok + "'");
    }
}

double parse_double(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) parse_fail(line, "bad number '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "bad number '" + tok + "'");
    }
}

} // namespace

RotFile parse_rot(std::istream& in) {
    RotFile f;
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_n = false;
    std::vector<char> have_rot;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;

        if (!saw_header) {
            if (tok != "planar-rot") parse_fail(lineno, "expected 'planar-rot 1' header");
            std::string ver;
            if (!(ls >> ver) || ver != "1") parse_fail(lineno, "unsupported format version");
            saw_header = true;
            continue;
        }
        if (tok == "n") {
            std::string t;
            if (!(ls >> t)) parse_fail(lineno, "missing vertex count");
            f.n = parse_int(t, lineno);
            if (f.n < 1) parse_fail(lineno, "vertex count must be positive");
            f.rotations.assign(f.n, {});
            f.coords.assign(f.n, {0.0, 0.0});
            have_rot.assign(f.n, 0);
            saw_n = true;
        } else if (tok == "outer") {
            if (!saw_n) parse_fail(lineno, "'outer' before 'n'");
            std::array<int, 3> o{};
            for (int i = 0; i < 3; ++i) {
                std::string t;
                if (!(ls >> t)) parse_fail(lineno, "outer needs three vertex ids");
                o[i] = parse_int(t, lineno);
            }
            f.outer = o;
        } else if (tok == "v") {
            if (!saw_n) parse_fail(lineno, "'v' before 'n'");
            std::string t;
            if (!(ls >> t)) parse_fail(lineno, "missing vertex id");
            if (!t.empty() && t.back() == ':') t.pop_back();
            if (t.empty()) parse_fail(lineno, "missing vertex id");
            int id = parse_int(t, lineno);
            if (id < 0 || id >= f.n) parse_fail(lineno, "vertex id out of range");
            if (have_rot[id]) parse_fail(lineno, "duplicate rotation for vertex " + std::to_string(id));
            have_rot[id] = 1;
            std::vector<int> nbrs;
            while (ls >> t) {
                if (t == ":") continue;  // tolerate "v 0 :" spacing
                if (t[0] == '#') break;
                nbrs.push_back(parse_int(t, lineno));
            }
            if (nbrs.empty()) parse_fail(lineno, "empty rotation for vertex " + std::to_string(id));
            f.rotations[id] = std::move(nbrs);
        } else if (tok == "coords") {
            if (!saw_n) parse_fail(lineno, "'coords' before 'n'");
            std::string t;
            if (!(ls >> t)) parse_fail(lineno, "missing vertex id");
            int id = parse_int(t, lineno);
            if (id < 0 || id >= f.n) parse_fail(lineno, "vertex id out of range");
            std::string xs, ys;
            if (!(ls >> xs >> ys)) parse_fail(lineno, "coords needs x and y");
            f.coords[id] = {parse_double(xs, lineno), parse_double(ys, lineno)};
            f.has_coords = true;
        } else {
            parse_fail(lineno, "unknown directive '" + tok + "'");
        }
    }
    if (!saw_header) raise(errc::parse_error, "empty input, expected 'planar-rot 1' header");
    if (!saw_n) raise(errc::parse_error, "missing 'n' line");
    for (int v = 0; v < f.n; ++v)
        if (!have_rot[v]) raise(errc::parse_error, "missing rotation for vertex " + std::to_string(v));
    if (!f.has_coords) f.coords.clear();
    return f;
}

RotFile parse_rot_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::io_error, "cannot open " + path);
    return parse_rot(in);
}

PlanarEmbedding embedding_from(const RotFile& f) {
    return build_embedding(f.n, f.rotations, f.outer);
}

PlanarEmbedding load_embedding(const std::string& path) {
    return embedding_from(parse_rot_file(path));
}

void write_rot(std::ostream& out, const PlanarEmbedding& g,
               const std::vector<std::array<double, 2>>* coords) {
    out << "planar-rot 1\n";
    out << "n " << g.n << "\n";
    out << "outer " << g.outer[0] << " " << g.outer[1] << " " << g.outer[2] << "\n";
    for (int v = 0; v < g.n; ++v) {
        out << "v " << v << ":";
        for (int d = g.rot_offset[v]; d < g.rot_offset[v + 1]; ++d) out << " " << g.neighbors[d];
        out << "\n";
    }
    if (coords) {
        out.precision(17);
        for (int v = 0; v < g.n; ++v)
            out << "coords " << v << " " << (*coords)[v][0] << " " << (*coords)[v][1] << "\n";
    }
}

void write_rot_file(const std::string& path, const PlanarEmbedding& g,
                    const std::vector<std::array<double, 2>>* coords) {
    std::ofstream out(path);
    require(out.good(), errc::io_error, "cannot open " + path + " for writing");
    write_rot(out, g, coords);
    require(out.good(), errc::io_error, "write failed for " + path);
}

} // namespace planarsep
