#include "gmod/session.hpp"

#include <sstream>

namespace gmod {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::vector<int> parse_twist_list(const std::string& text, int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw parse_error("expected a twist list like [0,1]", line, 1);
  std::string inner = trim(t.substr(1, t.size() - 2));
  std::vector<int> out;
  if (inner.empty()) return out;
  for (const std::string& piece : split(inner, ',')) {
    std::string p = trim(piece);
    if (p.empty()) throw parse_error("empty twist entry", line, 1);
    try {
      out.push_back(std::stoi(p));
    } catch (...) {
      throw parse_error("bad twist entry '" + p + "'", line, 1);
    }
  }
  return out;
}

}  // namespace

Session::Session(SessionOptions opts) : opts_(opts) {}

void Session::require_ring(int line) const {
  if (!ring_) throw parse_error("no ring declared yet", line, 1);
}

FPModule Session::resolve_module(const std::string& name, int line) const {
  if (name == "_") {
    if (!has_last_module_)
      throw parse_error("no previous module result bound to '_'", line, 1);
    return last_module_;
  }
  auto it = modules_.find(name);
  if (it != modules_.end()) return it->second;
  auto ii = ideals_.find(name);
  if (ii != ideals_.end())
    return quotient_ring_module(ring_, ii->second.groebner);
  throw parse_error("unbound module name '" + name + "'", line, 1);
}

ArtinianRep Session::resolve_art(const std::string& name, int line) const {
  auto it = arts_.find(name);
  if (it == arts_.end())
    throw parse_error("unbound artinian name '" + name + "'", line, 1);
  return it->second;
}

void Session::bind_last(const FPModule& M) {
  last_module_ = M;
  has_last_module_ = true;
}

namespace {

std::vector<Polynomial> parse_poly_list(const RingPtr& ring,
                                        const std::string& text, int line) {
  std::vector<Polynomial> out;
  for (const std::string& piece : split(text, ',')) {
    std::string p = trim(piece);
    if (p.empty()) throw parse_error("empty polynomial in list", line, 1);
    if (p == "0") {
      out.push_back(Polynomial::zero(ring));
      continue;
    }
    out.push_back(parse_poly(ring, p, line));
  }
  return out;
}

/// Parse a parenthesized polynomial list `(f, g, ...)`; `()` is empty.
std::vector<Polynomial> parse_paren_list(const RingPtr& ring,
                                         const std::string& text, int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw parse_error("expected a parenthesized list like (x1, x2)", line, 1);
  std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return {};
  return parse_poly_list(ring, inner, line);
}

}  // namespace

void Session::execute_line(const std::string& raw, int line_number,
                           std::vector<std::string>& out) {
  std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return;

  std::istringstream is(line);
  std::string head;
  is >> head;

  if (head == "ring") {
    std::int64_t p;
    if (!(is >> p)) throw parse_error("ring needs a characteristic", line_number, 6);
    std::vector<std::string> names;
    std::string nm;
    while (is >> nm) names.push_back(nm);
    try {
      ring_ = make_ring(p, names);
    } catch (const structural_error& e) {
      throw parse_error(e.what(), line_number, 6);
    }
    ideals_.clear();
    modules_.clear();
    maps_.clear();
    arts_.clear();
    has_last_module_ = false;
    return;
  }

  if (head == "ideal") {
    require_ring(line_number);
    std::string name, eq;
    is >> name >> eq;
    if (eq != "=") throw parse_error("ideal binding needs '='", line_number, 1);
    std::string rest;
    std::getline(is, rest);
    std::vector<Polynomial> gens = parse_poly_list(ring_, rest, line_number);
    if (ideals_.count(name) || modules_.count(name) || arts_.count(name))
      throw parse_error("name '" + name + "' is already bound", line_number, 1);
    ideals_.emplace(name, make_ideal(ring_, std::move(gens)));
    return;
  }

  if (head == "module") {
    require_ring(line_number);
    std::string name, eq, kw;
    is >> name >> eq >> kw;
    if (eq != "=" || kw != "coker")
      throw parse_error("module binding is `module <name> = coker twists:[...] rel:[...]`",
                        line_number, 1);
    std::string rest;
    std::getline(is, rest);
    size_t tpos = rest.find("twists:");
    size_t rpos = rest.find("rel:");
    if (tpos == std::string::npos || rpos == std::string::npos)
      throw parse_error("module binding needs twists:[...] and rel:[...]",
                        line_number, 1);
    std::string tpart = trim(rest.substr(tpos + 7, rpos - (tpos + 7)));
    std::vector<int> twists = parse_twist_list(tpart, line_number);
    std::string rpart = trim(rest.substr(rpos + 4));
    if (rpart.size() < 2 || rpart.front() != '[' || rpart.back() != ']')
      throw parse_error("rel needs a bracketed matrix", line_number, 1);
    std::string inner = trim(rpart.substr(1, rpart.size() - 2));
    FreeModule F(ring_, twists);
    std::vector<FreeElement> rels;
    if (!inner.empty()) {
      for (const std::string& rowtext : split(inner, ';')) {
        std::vector<Polynomial> comps =
            parse_poly_list(ring_, rowtext, line_number);
        if (static_cast<int>(comps.size()) != F.rank())
          throw parse_error("relation row needs one entry per generator",
                            line_number, 1);
        rels.emplace_back(F, std::move(comps));
      }
    }
    if (ideals_.count(name) || modules_.count(name) || arts_.count(name))
      throw parse_error("name '" + name + "' is already bound", line_number, 1);
    modules_.emplace(name, present(F, std::move(rels)));
    return;
  }

  if (head == "map") {
    require_ring(line_number);
    // map <name>: <src> -> <dst> = [row; ...]
    std::string rest;
    std::getline(is, rest);
    size_t colon = rest.find(':');
    size_t arrow = rest.find("->");
    size_t eq = rest.find('=');
    if (colon == std::string::npos || arrow == std::string::npos ||
        eq == std::string::npos || !(colon < arrow && arrow < eq))
      throw parse_error("map binding is `map <name>: <src> -> <dst> = [row; ...]`",
                        line_number, 1);
    std::string name = trim(rest.substr(0, colon));
    std::string srcn = trim(rest.substr(colon + 1, arrow - colon - 1));
    std::string dstn = trim(rest.substr(arrow + 2, eq - arrow - 2));
    std::string mtext = trim(rest.substr(eq + 1));
    FPModule src = resolve_module(srcn, line_number);
    FPModule dst = resolve_module(dstn, line_number);
    if (mtext.size() < 2 || mtext.front() != '[' || mtext.back() != ']')
      throw parse_error("map needs a bracketed matrix", line_number, 1);
    std::string inner = trim(mtext.substr(1, mtext.size() - 2));
    std::vector<std::vector<Polynomial>> m;
    if (!inner.empty())
      for (const std::string& rowtext : split(inner, ';'))
        m.push_back(parse_poly_list(ring_, rowtext, line_number));
    if (static_cast<int>(m.size()) != dst.ambient().rank())
      throw parse_error("map matrix needs target-rank rows", line_number, 1);
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != src.ambient().rank())
        throw parse_error("map matrix row needs source-rank entries",
                          line_number, 1);
    if (maps_.count(name))
      throw parse_error("name '" + name + "' is already bound", line_number, 1);
    ModuleMap mm(src, dst, FreeMap(src.ambient(), dst.ambient(), std::move(m)));
    maps_.emplace(name, MapBinding{srcn, dstn, std::move(mm)});
    return;
  }

  if (head == "art") {
    require_ring(line_number);
    std::string name, eq, functor, marg;
    is >> name >> eq >> functor >> marg;
    if (eq != "=" || (functor != "F1" && functor != "F2"))
      throw parse_error("art binding is `art <name> = F1|F2 <module>`",
                        line_number, 1);
    FPModule M = resolve_module(marg, line_number);
    if (ideals_.count(name) || modules_.count(name) || arts_.count(name))
      throw parse_error("name '" + name + "' is already bound", line_number, 1);
    arts_.emplace(name, functor == "F1" ? F1(M) : F2(M));
    return;
  }

  std::string args;
  std::getline(is, args);
  run_verb(head, trim(args), line_number, out);
}

void Session::run_verb(const std::string& verb, const std::string& args,
                       int line, std::vector<std::string>& out) {
  require_ring(line);
  IsoOptions iso_opts;
  iso_opts.seed = opts_.seed;
  iso_opts.degree_window = opts_.max_degree;

  std::istringstream is(args);

  if (verb == "invariants") {
    std::string name;
    is >> name;
    InvariantReport r = invariants(resolve_module(name, line));
    std::ostringstream os;
    os << "dim=" << r.dim << ", depth=";
    if (r.depth == kDepthInfinity) os << "inf";
    else os << r.depth;
    os << ", CM=" << yn(r.is_cm) << ", finite_length=" << yn(r.is_finite_length);
    out.push_back(os.str());
    return;
  }

  if (verb == "gb") {
    std::string name;
    is >> name;
    auto ii = ideals_.find(name);
    std::ostringstream os;
    os << "gb:";
    if (ii != ideals_.end()) {
      if (ii->second.groebner.empty()) os << " []";
      for (size_t k = 0; k < ii->second.groebner.size(); ++k)
        os << (k ? "; " : " ") << render_poly(ii->second.groebner[k]);
    } else {
      FPModule M = resolve_module(name, line);
      if (M.relations().empty()) os << " []";
      for (size_t k = 0; k < M.relations().size(); ++k)
        os << (k ? "; " : " ") << render_element(M.relations()[k]);
    }
    out.push_back(os.str());
    return;
  }

  if (verb == "hilbert") {
    std::string name;
    int lo, hi;
    is >> name >> lo >> hi;
    if (is.fail() || lo > hi)
      throw parse_error("hilbert needs `hilbert <name> <lo> <hi>`", line, 1);
    FPModule M = resolve_module(name, line);
    std::ostringstream os;
    os << "hilbert[" << lo << ".." << hi << "]:";
    for (int d = lo; d <= hi; ++d) os << " " << hilbert_function(M, d);
    out.push_back(os.str());
    return;
  }

  if (verb == "resolve" || verb == "betti") {
    std::string name;
    is >> name;
    int maxlen = -1;
    if (!(is >> maxlen)) maxlen = -1;
    FPModule M = resolve_module(name, line);
    int cap = maxlen >= 0 ? maxlen : M.ring()->nvars() + 1;
    Complex res = free_resolution(M, cap);
    for (const BettiRow& row : betti_table(res)) {
      std::ostringstream os;
      os << row.index << ": " << row.twists.size() << " (";
      for (size_t k = 0; k < row.twists.size(); ++k)
        os << (k ? "," : "") << row.twists[k];
      os << ")";
      out.push_back(os.str());
    }
    if (verb == "resolve")
      for (int i = 1; i <= res.length(); ++i)
        out.push_back("d" + std::to_string(i) + ": " +
                      render_matrix(res.differential(i).lift()));
    return;
  }

  if (verb == "ext") {
    int i, w;
    std::string name;
    is >> i >> name >> w;
    if (is.fail()) throw parse_error("ext needs `ext <i> <module> <twist>`", line, 1);
    FPModule E = ext_module(i, resolve_module(name, line), w);
    bind_last(E);
    out.push_back(render_module(E));
    return;
  }

  if (verb == "koszul") {
    std::string variant, name;
    int i;
    is >> variant >> i >> name;
    std::string rest;
    std::getline(is, rest);
    std::vector<Polynomial> xs = parse_paren_list(ring_, trim(rest), line);
    FPModule M = resolve_module(name, line);
    FPModule H;
    if (variant == "chain") {
      Complex C = koszul_complex(xs, M, KoszulVariant::chain);
      H = complex_homology(C, i);
    } else if (variant == "cochain") {
      H = koszul_cochain_cohomology(xs, M, i);
    } else {
      throw parse_error("koszul needs `koszul chain|cochain <i> <module> (xs)`",
                        line, 1);
    }
    bind_last(H);
    out.push_back(render_module(H));
    return;
  }

  if (verb == "F1" || verb == "F2") {
    std::string name;
    is >> name;
    FPModule M = resolve_module(name, line);
    ArtinianRep X = (verb == "F1") ? F1(M) : F2(M);
    out.push_back("dual: " + render_module(X.dual()));
    return;
  }

  if (verb == "G1" || verb == "G2") {
    std::string name;
    is >> name;
    ArtinianRep X = resolve_art(name, line);
    FPModule M = (verb == "G1") ? G1(X) : G2(X);
    bind_last(M);
    out.push_back(render_module(M));
    return;
  }

  if (verb == "ndim" || verb == "width" || verb == "cocm") {
    std::string name;
    is >> name;
    ArtinianRep X = resolve_art(name, line);
    if (verb == "ndim") out.push_back("ndim=" + std::to_string(ndim(X)));
    else if (verb == "width") out.push_back("width=" + std::to_string(width(X)));
    else out.push_back("cocm=" + yn(is_co_cm(X)));
    return;
  }

  if (verb == "lochom-top") {
    std::string name;
    is >> name;
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);
    if (rest.rfind("sop=", 0) != 0)
      throw parse_error("lochom-top needs `lochom-top <art> sop=(xs)`", line, 1);
    SOP sop;
    sop.elements = parse_paren_list(ring_, rest.substr(4), line);
    ArtinianRep X = resolve_art(name, line);
    sop.target_dim = ndim(X);
    LocalHomologyResult r = local_homology_top(sop, X);
    bind_last(r.module);
    out.push_back("d=" + std::to_string(r.d) +
                  ", colength=" + std::to_string(r.colength));
    out.push_back(render_module(r.module));
    return;
  }

  if (verb == "koszul-art") {
    std::string name;
    int i, t;
    is >> name >> i >> t;
    std::string rest;
    std::getline(is, rest);
    std::vector<Polynomial> xs = parse_paren_list(ring_, trim(rest), line);
    ArtinianRep X = resolve_art(name, line);
    ArtinianRep H = koszul_homology_artinian(xs, t, i, X);
    out.push_back("dual: " + render_module(H.dual()));
    return;
  }

  if (verb == "cmfication") {
    std::string name;
    is >> name;
    FPModule C = cmfication_candidate(resolve_module(name, line));
    bind_last(C);
    out.push_back(render_module(C));
    return;
  }

  if (verb == "verify-cmf" || verb == "thm4-check") {
    std::string mn, mtn, mapn;
    is >> mn >> mtn >> mapn;
    auto mi = maps_.find(mapn);
    if (mi == maps_.end())
      throw parse_error("unbound map name '" + mapn + "'", line, 1);
    FPModule M = resolve_module(mn, line);
    FPModule Mt = resolve_module(mtn, line);
    std::ostringstream os;
    if (verb == "verify-cmf") {
      CMficationReport r = verify_cmfication(M, Mt, mi->second.map);
      os << "injective=" << yn(r.injective)
         << ", condition_i=" << yn(r.condition_i)
         << ", condition_ii=" << yn(r.condition_ii)
         << ", condition_iii=" << yn(r.condition_iii) << ", verdict="
         << (r.pass() ? "pass" : "fail(" + r.first_failure + ")");
    } else {
      Theorem4Report r = theorem4_check(M, Mt, mi->second.map);
      os << "d_ge_2=" << yn(r.d_at_least_2)
         << ", m_kills_cokernel=" << yn(r.m_kills_cokernel)
         << ", injective=" << yn(r.cmf.injective)
         << ", condition_i=" << yn(r.cmf.condition_i)
         << ", condition_ii=" << yn(r.cmf.condition_ii)
         << ", condition_iii=" << yn(r.cmf.condition_iii)
         << ", verdict=" << (r.pass() ? "pass" : "fail");
    }
    out.push_back(os.str());
    return;
  }

  if (verb == "goto-check") {
    std::string name;
    is >> name;
    bool ok = goto_pattern_check(resolve_module(name, line));
    out.push_back("goto_pattern=" + yn(ok) + ", note=buchsbaum_not_checked");
    return;
  }

  if (verb == "cor2-check") {
    std::string name;
    is >> name;
    Corollary2Report r = corollary2_check(resolve_module(name, line));
    out.push_back("mIsCM=" + yn(r.m_is_cm) + ", extIsCM=" + yn(r.ext_is_cm));
    out.push_back("ext: " + render_module(r.ext_module));
    bind_last(r.ext_module);
    return;
  }

  if (verb == "paper-example") {
    PaperExample ex = paper_example(ring_);
    ideals_.erase("I");
    modules_.erase("R");
    modules_.erase("B");
    maps_.erase("iota");
    ideals_.emplace("I", ex.I);
    modules_.emplace("R", ex.R);
    modules_.emplace("B", ex.B);
    maps_.emplace("iota", MapBinding{"R", "B", ex.iota});
    out.push_back("bound: I, R, B, iota");
    return;
  }

  if (verb == "iso") {
    std::string an, bn;
    is >> an >> bn;
    IsoResult r = is_isomorphic(resolve_module(an, line),
                                resolve_module(bn, line), iso_opts);
    switch (r.answer) {
      case IsoAnswer::yes: out.push_back("yes"); break;
      case IsoAnswer::no: out.push_back("no"); break;
      default: out.push_back("unknown"); break;
    }
    return;
  }

  throw parse_error("unknown verb '" + verb + "'", line, 1);
}

SessionResult run_session(const std::string& text, SessionOptions opts) {
  SessionResult result;
  Session session(opts);
  std::ostringstream transcript;
  std::istringstream is(text);
  std::string line;
  int line_number = 0;
  try {
    while (std::getline(is, line)) {
      ++line_number;
      std::vector<std::string> out;
      session.execute_line(line, line_number, out);
      for (const std::string& l : out) transcript << l << "\n";
    }
  } catch (const parse_error& e) {
    transcript << "parse error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const error& e) {
    transcript << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }
  result.transcript = transcript.str();
  return result;
}

}  // namespace gmod
