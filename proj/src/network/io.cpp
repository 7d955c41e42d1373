#include "interlace/errors.hpp"
#include "interlace/network.hpp"

#include <map>
#include <sstream>

namespace interlace {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw ParseError("bad integer '" + s + "'", line);
        return static_cast<int>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + s + "'", line);
    }
}

}  // namespace

Network read_network(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    NetworkBuilder b;
    std::map<int, VertexId> ids;
    std::optional<Witness> witness;
    bool have_s = false, have_t = false, have_k = false;
    auto lookup = [&](const std::string& tok, int ln) {
        auto it = ids.find(parse_int(tok, ln));
        if (it == ids.end()) throw ParseError("unknown vertex " + tok, ln);
        return it->second;
    };
    auto id_list = [&](const std::vector<std::string>& toks, int ln) {
        std::vector<VertexId> out;
        for (std::size_t i = 1; i < toks.size(); ++i) out.push_back(lookup(toks[i], ln));
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "ILNET" || toks[1] != "1")
                throw ParseError("expected header 'ILNET 1'", lineno);
            header = true;
            continue;
        }
        const std::string& tag = toks[0];
        if (tag == "v") {
            if (toks.size() != 2 && toks.size() != 4) throw ParseError("vertex record needs 1 or 3 fields", lineno);
            int user_id = parse_int(toks[1], lineno);
            if (ids.count(user_id)) throw ParseError("duplicate vertex " + toks[1], lineno);
            std::optional<Coord> c;
            if (toks.size() == 4) c = Coord{parse_int(toks[2], lineno), parse_int(toks[3], lineno)};
            ids[user_id] = b.add_vertex(c);
        } else if (tag == "e") {
            if (toks.size() < 4) throw ParseError("edge record needs source, target and weight", lineno);
            std::string w;
            for (std::size_t i = 3; i < toks.size(); ++i) w += toks[i];
            Scalar weight;
            try {
                weight = parse_polynomial(w);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
            b.add_edge(lookup(toks[1], lineno), lookup(toks[2], lineno), weight);
        } else if (tag == "S") {
            b.set_sources(id_list(toks, lineno));
            have_s = true;
        } else if (tag == "T") {
            b.set_sinks(id_list(toks, lineno));
            have_t = true;
        } else if (tag == "k") {
            if (toks.size() != 2) throw ParseError("k record needs one integer", lineno);
            b.set_k(parse_int(toks[1], lineno));
            have_k = true;
        } else if (tag == "N") {
            if (!witness) witness = Witness{};
            witness->sources_cut = id_list(toks, lineno);
        } else if (tag == "NT") {
            if (!witness) witness = Witness{};
            witness->sinks_cut = id_list(toks, lineno);
        } else {
            throw ParseError("unknown record '" + tag + "'", lineno);
        }
    }
    if (!header) throw ParseError("missing header 'ILNET 1'");
    if (!have_s || !have_t || !have_k) throw ParseError("network needs S, T and k records");
    b.set_witness(witness);
    b.set_embedding_verified(false);
    b.set_name("input");
    try {
        return b.build();
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid network: ") + e.what());
    }
}

std::string write_network(const Network& g) {
    std::ostringstream out;
    out << "ILNET 1\n";
    out << "k " << g.k() << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v;
        if (g.coord(v)) out << " " << g.coord(v)->r << " " << g.coord(v)->c;
        out << "\n";
    }
    for (const auto& e : g.edges()) out << "e " << e.from << " " << e.to << " " << e.weight.to_compact_string() << "\n";
    auto list = [&](const char* tag, const std::vector<VertexId>& vs) {
        out << tag;
        for (VertexId v : vs) out << " " << v;
        out << "\n";
    };
    list("S", g.sources());
    list("T", g.sinks());
    if (g.witness()) {
        list("N", g.witness()->sources_cut);
        list("NT", g.witness()->sinks_cut);
    }
    return out.str();
}

}  // namespace interlace
