#include "tricert/tri_io.hpp"

#include <fstream>
#include <sstream>

namespace tricert {

std::string write_tri(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri 1\n";
    out << "n " << tri.tet_count() << "\n";
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (f) out << ' ';
            const auto& g = tri.gluing(t, f);
            if (!g)
                out << 'b';
            else
                out << "g:" << g->tet << ':' << g->face << ':' << g->perm.digits();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

Gluing parse_gluing(const std::string& tok) {
    // g:<tet>:<face>:<perm>
    std::size_t p1 = tok.find(':', 2);
    std::size_t p2 = tok.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (tok.size() < 3 || tok[1] != ':' || p1 == std::string::npos || p2 == std::string::npos)
        throw TriFormatError("malformed gluing entry: " + tok);
    try {
        Gluing g;
        g.tet = std::stoi(tok.substr(2, p1 - 2));
        g.face = std::stoi(tok.substr(p1 + 1, p2 - p1 - 1));
        g.perm = Perm4::from_digits(tok.substr(p2 + 1));
        return g;
    } catch (const std::exception& e) {
        throw TriFormatError("malformed gluing entry: " + tok + " (" + e.what() + ")");
    }
}

} // namespace

Triangulation read_tri(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int version = -1;
    if (!(in >> word) || word != "tri" || !(in >> version) || version != 1)
        throw TriFormatError("missing or unsupported version line (want \"tri 1\")");
    int n = -1;
    if (!(in >> word) || word != "n" || !(in >> n) || n < 0)
        throw TriFormatError("missing tetrahedron count line (want \"n <T>\")");
    GluingTable table(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!(in >> word)) throw TriFormatError("truncated gluing table");
            if (word == "b") continue;
            if (word.size() >= 1 && word[0] == 'g')
                table[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = parse_gluing(word);
            else
                throw TriFormatError("unexpected token: " + word);
        }
    }
    if (in >> word) throw TriFormatError("trailing content after gluing table: " + word);
    return Triangulation::build(std::move(table));
}

Triangulation read_tri_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TriFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_tri(buf.str());
}

void write_tri_file(const Triangulation& tri, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TriFormatError("cannot open " + path + " for writing");
    out << write_tri(tri);
}

} // namespace tricert
