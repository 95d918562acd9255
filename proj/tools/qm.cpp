#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "battery.hpp"
#include "qm/brauer.hpp"
#include "qm/certificates.hpp"
#include "qm/massey.hpp"
#include "qm/normgroups.hpp"
#include "qm/unipotent.hpp"

using json = nlohmann::json;
using namespace qm;

namespace {

enum Exit { Decided = 0, Error = 1, Undecided = 2 };

constexpr const char* kFooter =
    "Rationals are read and written as \"p/q\" strings. Exit codes: 0 decided, 2 unknown, 1 error.\n"
    "Over finite fields every defined Massey product vanishes, because the maximal pro-2 quotient of the\n"
    "absolute Galois group is free; that shortcut does not apply over Q and is not used.";

struct Globals {
  bool json = false;
  long search_bound = 10000;
  std::uint64_t seed = 1;
};

struct Response {
  int code = Error;
  json body;
  std::string text;
};

std::vector<Rational> parse_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

json envelope(json verdict, json certs = json::array(), json obstructions = json::array(), json trace = json::array()) {
  return {{"verdict", std::move(verdict)},
          {"certificates", std::move(certs)},
          {"obstructions", std::move(obstructions)},
          {"trace", std::move(trace)}};
}

std::string verdict_name(const normgroups::Verdict& v) {
  return normgroups::is_member(v) ? "member" : normgroups::is_nonmember(v) ? "nonmember" : "unknown";
}

Response massey_response(const massey::MasseyVerdict& v) {
  Response r;
  r.body = massey::to_json(v);
  r.code = v.decided() ? Decided : Undecided;
  std::ostringstream out;
  out << "defined: " << massey::to_string(v.defined) << "\nvanishes: " << massey::to_string(v.vanishes) << "\n";
  for (const auto& t : v.trace) out << "  " << t << "\n";
  r.text = out.str();
  return r;
}

Response symbol_cmd(const Rational& x, const Rational& y) {
  auto inv = brauer::local_invariants({{x, y}});
  json places = json::object(), obstructions = json::array(), certs = json::array();
  std::ostringstream out;
  for (const auto& [v, e] : inv) {
    places[brauer::to_string(v)] = e;
    if (e) obstructions.push_back(certificates::symbol_obstruction(x, y, v));
  }
  bool zero = obstructions.empty();
  if (zero) {
    auto p = brauer::conic_point(x, y);
    certs.push_back(certificates::conic(x, y, std::get<brauer::ConicPoint>(p)));
  }
  out << "(" << to_string(x) << ", " << to_string(y) << ") " << (zero ? "= 0" : "!= 0");
  for (const auto& o : obstructions) out << ", ramified at " << o.at("place").get<std::string>();
  Response r{Decided, envelope({{"zero", zero}}, certs, obstructions), out.str() + "\n"};
  r.body["invariants"] = places;
  return r;
}

Response conic_cmd(const Rational& a, const Rational& b) {
  auto p = brauer::conic_point(a, b);
  if (const auto* pt = std::get_if<brauer::ConicPoint>(&p)) {
    Response r{Decided, envelope({{"solvable", true}}, json::array({certificates::conic(a, b, *pt)})), ""};
    r.body["point"] = certificates::encode(std::vector<Rational>{pt->x, pt->y, pt->z});
    r.text = to_string(pt->x) + " " + to_string(pt->y) + " " + to_string(pt->z) + "\n";
    return r;
  }
  const auto& np = std::get<brauer::NoPoint>(p);
  Response r{Decided, envelope({{"solvable", false}}, json::array(),
                               json::array({certificates::symbol_obstruction(a, b, np.obstruction)})),
             "no point: obstruction at " + brauer::to_string(np.obstruction) + "\n"};
  r.body["point"] = nullptr;
  return r;
}

Response slot_cmd(const Rational& a, const Rational& u, const Rational& b, const Rational& v) {
  try {
    auto s = brauer::common_slot(a, u, b, v);
    json certs = json::array({certificates::norm_identity(s.n_a, u / s.w), certificates::norm_identity(s.n_b, v / s.w),
                              certificates::norm_identity(s.n_ab, s.w)});
    Response r{Decided, envelope({{"common_slot", true}, {"w", certificates::encode(s.w)}}, certs), ""};
    r.text = "(a,u) = (a,w) = (b,w) = (b,v) with w = " + to_string(s.w) + "\n";
    return r;
  } catch (const brauer::ClassesDiffer&) {
    brauer::SymbolExpr e{{a, u}, {b, v}};
    auto place = brauer::obstruction(e);
    json trace = json::array({"(a,u) - (b,v) is ramified at " + (place ? brauer::to_string(*place) : "?")});
    return {Decided, envelope({{"common_slot", false}}, json::array(), json::array(), trace),
            "(a,u) != (b,v)\n"};
  }
}

Response member_cmd(const Rational& u, const std::vector<Rational>& groups, bool biquadratic, long bound) {
  Response r;
  json cert;
  normgroups::Verdict v;
  if (biquadratic) {
    if (groups.size() != 2) throw CLI::ValidationError("--biquadratic needs exactly two groups b,c");
    v = normgroups::member_biquadratic(u, groups[0], groups[1]);
    cert = certificates::biquadratic_membership(u, groups[0], groups[1], v);
  } else {
    if (groups.empty() || groups.size() > 3) throw CLI::ValidationError("--groups takes one to three values");
    v = normgroups::member(u, groups, bound);
    cert = certificates::membership(u, groups, v);
  }
  json certs = json::array(), obstructions = json::array();
  if (normgroups::is_member(v)) certs.push_back(cert);
  if (normgroups::is_nonmember(v)) obstructions.push_back(cert);
  r.code = normgroups::is_unknown(v) ? Undecided : Decided;
  r.body = envelope(verdict_name(v), certs, obstructions, json::array({normgroups::describe(v)}));
  r.text = normgroups::describe(v) + "\n";
  return r;
}

Response groups_verify() {
  auto g5 = unipotent::build_groups(4);
  auto cart = unipotent::cartesian_square_check();
  auto pres = unipotent::verify_presentation_u4();
  auto g3 = unipotent::build_groups(2);
  auto V = unipotent::direct_product(unipotent::cyclic_group(2), unipotent::cyclic_group(2));
  bool no_lift = !unipotent::lift_search(V, {1, 2}, g3.U, g3.U_abel);
  bool bar_lift = unipotent::lift_search(V, {1, 2}, g3.Ubar, g3.Ubar_abel).has_value();
  auto h2 = unipotent::h2_class_vs_cup();
  json report = {
      {"U5_order", g5.U.order()},
      {"cartesian_square", {{"domain", cart.domain}, {"fiber_product", cart.fiber_product}, {"bijective", cart.bijective}}},
      {"u4_presentation", {{"relations_hold", pres.relations_hold},
                           {"generated_order", pres.generated_order},
                           {"presented_order", pres.presented_order ? json(*pres.presented_order) : json(nullptr)},
                           {"ok", pres.ok}}},
      {"identity_lifts_to_U3", !no_lift},
      {"identity_lifts_to_Ubar3", bar_lift},
      {"extension_class_is_cup", h2.ok()}};
  bool ok = g5.U.order() == 1024 && cart.bijective && pres.ok && no_lift && bar_lift && h2.ok();
  Response r{ok ? Decided : Error, envelope(ok), ""};
  r.body["report"] = report;
  r.text = report.dump(2) + "\n";
  return r;
}

Response selftest(const Globals& g) {
  auto results = battery::run(g.seed, g.search_bound);
  json rows = json::array();
  std::ostringstream out;
  bool ok = true;
  for (const auto& res : results) {
    rows.push_back({{"id", res.id}, {"name", res.name}, {"pass", res.pass}, {"detail", res.detail}, {"seconds", res.seconds}});
    out << battery::format(res) << "\n";
    ok = ok && res.pass;
  }
  Response r{ok ? Decided : Error, envelope(ok), out.str()};
  r.body["criteria"] = rows;
  return r;
}

json read_documents(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (json::accept(all)) return json::array({json::parse(all)});
  json docs = json::array();
  std::istringstream lines(all);
  std::string line;
  while (std::getline(lines, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) docs.push_back(json::parse(line));
  return docs;
}

Response verify_cmd(const std::string& path) {
  json docs;
  if (path == "-") {
    docs = read_documents(std::cin);
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    docs = read_documents(f);
  }
  auto checks = certificates::verify_all(docs);
  json rows = json::array();
  std::ostringstream out;
  bool ok = !checks.empty();
  for (const auto& c : checks) {
    rows.push_back({{"kind", c.kind}, {"ok", c.ok}, {"detail", c.detail}});
    out << (c.ok ? "ok    " : "FAIL  ") << c.kind << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    ok = ok && c.ok;
  }
  if (checks.empty()) out << "no certificates found\n";
  Response r{ok ? Decided : Error, envelope(ok), out.str()};
  r.body["checked"] = rows;
  return r;
}

// Parses one request (subcommand and its arguments) and runs it.
Response run(std::vector<std::string> tokens, Globals g) {
  CLI::App app{"Massey products of rational square classes", "qm"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "print JSON");
  app.add_option("--search-bound", g.search_bound, "bound for certificate searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized batteries");
  std::string batch_file;
  app.add_option("--batch", batch_file, "JSON-lines file of {\"cmd\": ..., \"args\": [...]} requests");

  std::function<Response()> action;
  auto rationals = [&](CLI::App* sub, std::vector<std::string>& out, std::size_t n, const std::string& what) {
    sub->add_option("values", out, what)->required()->expected(static_cast<int>(n));
  };
  std::vector<std::string> vals;

  auto* symbol = app.add_subcommand("symbol", "local invariants of the quaternion symbol (x, y)");
  rationals(symbol, vals, 2, "x y");
  symbol->callback([&] { action = [&] { return symbol_cmd(parse_rational(vals[0]), parse_rational(vals[1])); }; });

  auto* conic = app.add_subcommand("conic", "rational point on a x^2 + b y^2 = z^2");
  rationals(conic, vals, 2, "a b");
  conic->callback([&] { action = [&] { return conic_cmd(parse_rational(vals[0]), parse_rational(vals[1])); }; });

  auto* slot = app.add_subcommand("slot", "w with (a,u) = (a,w) = (b,w) = (b,v)");
  rationals(slot, vals, 4, "a u b v");
  slot->callback([&] {
    action = [&] {
      return slot_cmd(parse_rational(vals[0]), parse_rational(vals[1]), parse_rational(vals[2]), parse_rational(vals[3]));
    };
  });

  std::string u, groups;
  bool biquadratic = false;
  auto* member = app.add_subcommand("member", "is u in N_{g1} N_{g2} N_{g3}, or a norm from F_{b,c}");
  member->add_option("--u", u, "value")->required();
  member->add_option("--groups", groups, "comma-separated classes")->required();
  member->add_flag("--biquadratic", biquadratic, "norms from F_{b,c} with --groups b,c");
  member->callback([&] {
    action = [&] { return member_cmd(parse_rational(u), parse_list(groups), biquadratic, g.search_bound); };
  });

  auto* triple = app.add_subcommand("triple", "the triple product <a,b,c>");
  rationals(triple, vals, 3, "a b c");
  triple->callback([&] {
    action = [&] {
      return massey_response(massey::triple(parse_rational(vals[0]), parse_rational(vals[1]), parse_rational(vals[2])));
    };
  });

  auto* four = app.add_subcommand("four", "the fourfold product <a,b,c,d> with a d a square");
  rationals(four, vals, 4, "a b c d");
  four->callback([&] {
    action = [&] {
      return massey_response(massey::four(parse_rational(vals[0]), parse_rational(vals[1]), parse_rational(vals[2]),
                                          parse_rational(vals[3]), {g.search_bound}));
    };
  });

  auto* thm13 = app.add_subcommand("thm13", "the fourfold product <bc,b,c,bc>");
  rationals(thm13, vals, 2, "b c");
  thm13->callback([&] {
    action = [&] {
      return massey_response(massey::thm13(parse_rational(vals[0]), parse_rational(vals[1]), {g.search_bound}));
    };
  });

  auto* hw = app.add_subcommand("hw", "the worked example <34,2,17,34>");
  hw->callback([&] {
    action = [&] {
      auto rep = massey::hw();
      Response r = massey_response(rep.verdict);
      r.body = massey::to_json(rep);
      if (!rep.ok()) r.code = Error;
      return r;
    };
  });

  auto* gv = app.add_subcommand("groups-verify", "unipotent group battery");
  gv->callback([&] { action = [] { return groups_verify(); }; });

  auto* st = app.add_subcommand("selftest", "run the acceptance battery");
  st->callback([&] { action = [&] { return selftest(g); }; });

  std::string path;
  auto* verify = app.add_subcommand("verify", "re-check certificates from a file or - for stdin");
  verify->add_option("file", path, "JSON document, array, or JSON lines")->required();
  verify->callback([&] { action = [&] { return verify_cmd(path); }; });

  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    return {Decided, {{"help", help.str()}}, help.str()};
  }
  if (!batch_file.empty()) throw CLI::ValidationError("--batch is not allowed inside a batch request");
  return action();
}

Response run_guarded(const std::vector<std::string>& tokens, const Globals& g) {
  try {
    return run(tokens, g);
  } catch (const CLI::ParseError& e) {
    return {Error, {{"error", e.what()}}, std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {Error, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  }
}

int run_batch(const std::string& file, const Globals& g) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return Error;
  }
  std::vector<std::vector<std::string>> requests;
  std::vector<std::string> bad;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> tokens;
    std::string err;
    try {
      json j = json::parse(line);
      tokens.push_back(j.at("cmd").get<std::string>());
      for (const auto& a : j.value("args", json::array())) tokens.push_back(a.is_string() ? a.get<std::string>() : a.dump());
    } catch (const std::exception& e) {
      err = e.what();
    }
    requests.push_back(std::move(tokens));
    bad.push_back(err);
  }
  std::vector<Response> out(requests.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < requests.size();)
        out[i] = bad[i].empty() ? run_guarded(requests[i], g) : Response{Error, {{"error", bad[i]}}, ""};
    });
  for (auto& t : pool) t.join();
  int code = Decided;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::cout << json{{"index", i}, {"exit", out[i].code}, {"result", out[i].body}}.dump() << "\n";
    if (out[i].code == Error) code = Error;
    else if (out[i].code == Undecided && code == Decided) code = Undecided;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> tokens(argv + 1, argv + argc);
  Globals g;
  // global flags and --batch are handled before dispatch
  CLI::App pre{"qm"};
  pre.allow_extras();
  pre.set_help_flag();
  std::string batch_file;
  pre.add_flag("--json", g.json);
  pre.add_option("--search-bound", g.search_bound);
  pre.add_option("--seed", g.seed);
  pre.add_option("--batch", batch_file);
  try {
    pre.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return Error;
  }
  if (!batch_file.empty()) return run_batch(batch_file, g);

  try {
    Response r = run(tokens, g);
    if (g.json && !r.body.contains("help"))
      std::cout << r.body.dump(2) << "\n";
    else
      std::cout << r.text;
    return r.code;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return Error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Error;
  }
}
