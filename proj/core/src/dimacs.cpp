#include "oddpack/dimacs.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "oddpack/errors.hpp"

namespace oddpack {

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (!(fields >> format >> n >> m) || format != "edge" || n < 0 || m < 0) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem line");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) throw ParseError(line_no, "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      const Edge e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (auto [it, fresh] = seen.emplace(e, line_no); !fresh) {
        throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                      "} (first on line " + std::to_string(it->second) + ")");
      }
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "problem line announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace oddpack
