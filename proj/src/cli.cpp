#include "addsys/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "addsys/io.hpp"

namespace addsys::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "json";
  std::uint64_t max_product = Limits{}.max_product;
  std::string input;

  std::string dims;
  bool count_only = false;
  std::uint64_t limit = 0;
  std::string jof;
  std::string flavour;
  std::string sds;
  std::string signs;
  std::string kind;
};

struct Context {
  Options opt;
  std::istream* in = nullptr;
  std::ostringstream out;

  Limits limits() const { return Limits{opt.max_product}; }

  Json read_json() const {
    if (opt.input == "-") {
      std::stringstream buf;
      buf << in->rdbuf();
      return io::parse(buf.str());
    }
    std::ifstream f(opt.input);
    if (!f) throw InputError("cannot open '" + opt.input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return io::parse(buf.str());
  }

  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (opt.format == f) return;
    throw InputError("--format " + opt.format + " is not available for this command");
  }

  void emit(const Json& j) { out << io::canonical(j) << '\n'; }

  int report(const VerificationReport& r) {
    emit(io::to_json(r));
    return r.passed ? kOk : kVerificationFailed;
  }
};

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + item + "' in '" + text + "'");
    }
    if (used != item.size()) throw InputError("bad integer '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

// "+-+-,++--"
std::pair<std::vector<Int>, std::vector<Int>> parse_signs(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--signs expects two vectors, e.g. +-,-+");
  auto vec = [&](const std::string& s) {
    std::vector<Int> v;
    for (char c : s) {
      if (c == '+') v.push_back(1);
      else if (c == '-') v.push_back(-1);
      else throw InputError("--signs may only contain '+', '-' and one ','");
    }
    return v;
  };
  return {vec(text.substr(0, comma)), vec(text.substr(comma + 1))};
}

Jof parse_valid_jof(const std::string& text) {
  auto jof = parse_jof(text);
  if (auto r = validate_jof(jof); !r) throw InputError("invalid JOF '" + text + "': " + *r.violated);
  return jof;
}

int jof_enumerate(Context& c) {
  c.require_format({"json", "text"});
  const auto dims = parse_int_list(c.opt.dims);
  for (Int d : dims)
    if (d < 1) throw InputError("dims must be positive");
  const auto total = count_jofs(dims);
  if (c.opt.count_only) {
    if (c.opt.format == "text") c.out << total << '\n';
    else c.emit(Json{{"count", total}});
    return kOk;
  }
  const auto listed = c.opt.limit ? std::min<std::uint64_t>(total, c.opt.limit) : total;
  if (listed > c.opt.max_product)
    throw CapExceeded(std::to_string(total) + " JOFs exceed --max-product; use --limit or --count-only");
  JofEnumerator e(dims);
  if (c.opt.format == "text") {
    for (std::uint64_t i = 0; i < listed; ++i) c.out << format_jof(*e.next()) << '\n';
    return kOk;
  }
  c.out << "{\"dims\":" << io::canonical(Json(dims)) << ",\"jofs\":[";
  for (std::uint64_t i = 0; i < listed; ++i) {
    if (i) c.out << ',';
    c.out << io::canonical(Json(format_jof(*e.next())));
  }
  c.out << "]}\n";
  return kOk;
}

int emit_jof(Context& c, const Jof& jof) {
  c.require_format({"json", "text"});
  if (c.opt.format == "text") c.out << format_jof(jof) << '\n';
  else c.emit(io::to_json(jof));
  return kOk;
}

int sumsys_from_jof(Context& c) {
  c.require_format({"json"});
  c.emit(io::to_json(build_sum_system(parse_valid_jof(c.opt.jof))));
  return kOk;
}

int sumsys_verify(Context& c) {
  c.require_format({"json"});
  return c.report(verify_sum_system(io::sumsystem_from_json(c.read_json()), c.limits()));
}

int sumsys_decompose(Context& c) {
  return emit_jof(c, decompose_sum_system(io::sumsystem_from_json(c.read_json()), c.limits()));
}

int sds_from_sumsys(Context& c) {
  c.require_format({"json"});
  const auto ss = io::sumsystem_from_json(c.read_json());
  const auto f = c.opt.flavour.empty() ? infer_flavour(ss) : parse_flavour(c.opt.flavour);
  c.emit(io::to_json(sumsys_to_sds(ss, f, c.limits())));
  return kOk;
}

int sds_to_sumsys_cmd(Context& c) {
  c.require_format({"json"});
  c.emit(io::to_json(sds_to_sumsys(io::sds_from_json(c.read_json()), c.limits())));
  return kOk;
}

int sds_verify(Context& c) {
  c.require_format({"json"});
  return c.report(verify_sds(io::sds_from_json(c.read_json()), c.limits()));
}

int cuboid_build(Context& c) {
  c.require_format({"json", "csv"});
  const auto m = build_cuboid(parse_valid_jof(c.opt.jof), c.limits());
  if (c.opt.format == "csv") c.out << io::to_csv(m);
  else c.emit(io::to_json(m));
  return kOk;
}

int cuboid_verify(Context& c) {
  c.require_format({"json"});
  const auto m = io::cuboid_from_json(c.read_json());
  capped_product(std::vector<std::size_t>{m.size()}, c.limits());
  return c.report(verify_reversible(m));
}

int cuboid_decompose(Context& c) { return emit_jof(c, decompose_cuboid(io::cuboid_from_json(c.read_json()), c.limits())); }

int emit_square(Context& c, const SquareMatrix& m) {
  c.require_format({"json", "csv"});
  if (c.opt.format == "csv") c.out << io::to_csv(m);
  else c.emit(io::to_json(m));
  return kOk;
}

SdsSystem read_two_part_sds(Context& c) {
  c.opt.input = c.opt.sds;
  auto s = io::sds_from_json(c.read_json());
  if (s.order() != 2) throw InputError("square constructions need a two-part SDS, got " + std::to_string(s.order()));
  return s;
}

void require_non_inclusive(const SdsSystem& s) {
  if (s.flavour() != Flavour::NonInclusive) throw InputError("this construction needs a non-inclusive SDS");
}

int square_reversible(Context& c) {
  const auto s = read_two_part_sds(c);
  const auto& p = s.parts();
  return emit_square(c, s.flavour() == Flavour::Inclusive ? reversible_square_odd(p[0], p[1])
                                                          : reversible_square_even(p[0], p[1]));
}

int square_magic(Context& c) {
  const auto s = read_two_part_sds(c);
  require_non_inclusive(s);
  const auto& p = s.parts();
  auto v = alternating_signs(p[0].size());
  auto w = alternating_signs(p[1].size());
  if (!c.opt.signs.empty()) std::tie(v, w) = parse_signs(c.opt.signs);
  return emit_square(c, associated_magic_square(p[0], p[1], v, w));
}

int square_most_perfect(Context& c) {
  const auto s = read_two_part_sds(c);
  require_non_inclusive(s);
  if (!c.opt.signs.empty()) throw InputError("--signs applies to magic squares only");
  return emit_square(c, most_perfect_square(s.parts()[0], s.parts()[1]));
}

int square_verify(Context& c) {
  c.require_format({"json"});
  return c.report(verify_square(io::square_from_json(c.read_json()), parse_square_kind(c.opt.kind)));
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
    case ErrorKind::Overflow:
      return kInputError;
    case ErrorKind::Cap:
      return kCapExceeded;
    case ErrorKind::Verification:
    case ErrorKind::Internal:
      return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Context c;
  c.in = &in;
  auto& o = c.opt;
  std::function<int(Context&)> action;

  CLI::App app{"Constructs and verifies sum systems, SDS, reversible cuboids and squares", "addsys"};
  app.require_subcommand(1);
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, int (*fn)(Context&)) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--max-product", o.max_product, "cap on materialised products (default 1e8)")
        ->check(CLI::PositiveNumber);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "JSON document, or - for stdin")->required();
    return sub;
  };

  auto* jof = app.add_subcommand("jof", "joint ordered factorisations")->require_subcommand(1);
  auto* en = leaf(jof, "enumerate", "list or count the JOFs of a dims vector", jof_enumerate);
  en->add_option("--dims", o.dims, "comma-separated dims, e.g. 15,8,6")->required();
  en->add_flag("--count-only", o.count_only);
  en->add_option("--limit", o.limit, "list at most K JOFs");

  auto* ss = app.add_subcommand("sumsys", "sum systems")->require_subcommand(1);
  leaf(ss, "from-jof", "build the sum system of a JOF", sumsys_from_jof)
      ->add_option("jof", o.jof, "JOF such as 1:2,2:3")
      ->required();
  with_input(leaf(ss, "verify", "check the sum-system property", sumsys_verify));
  with_input(leaf(ss, "decompose", "recover the canonical JOF", sumsys_decompose));

  auto* sds = app.add_subcommand("sds", "sum-and-distance systems")->require_subcommand(1);
  with_input(leaf(sds, "from-sumsys", "convert a sum system", sds_from_sumsys))
      ->add_option("--flavour", o.flavour, "inclusive or non-inclusive (default: from cardinality parity)");
  with_input(leaf(sds, "to-sumsys", "convert to a sum system", sds_to_sumsys_cmd));
  with_input(leaf(sds, "verify", "check the SDS property", sds_verify));

  auto* cub = app.add_subcommand("cuboid", "principal reversible cuboids")->require_subcommand(1);
  leaf(cub, "build", "build the cuboid of a JOF", cuboid_build)->add_option("--jof", o.jof)->required();
  with_input(leaf(cub, "verify", "check principal reversibility", cuboid_verify));
  with_input(leaf(cub, "decompose", "recover the canonical JOF", cuboid_decompose));

  auto* sq = app.add_subcommand("square", "squares from two-part SDS")->require_subcommand(1);
  leaf(sq, "reversible", "reversible square (side parity from the SDS flavour)", square_reversible)
      ->add_option("--sds", o.sds, "SDS document, or -")
      ->required();
  auto* magic = leaf(sq, "magic", "associated magic square", square_magic);
  magic->add_option("--sds", o.sds, "SDS document, or -")->required();
  magic->add_option("--signs", o.signs, "sign vectors v,w such as +-,-+");
  auto* mp = leaf(sq, "mostperfect", "most-perfect square", square_most_perfect);
  mp->add_option("--sds", o.sds, "SDS document, or -")->required();
  mp->add_option("--signs", o.signs);
  with_input(leaf(sq, "verify", "check a square", square_verify))
      ->add_option("--kind", o.kind, "reversible, associated or most-perfect")
      ->required();

  CommandResult result;
  std::ostringstream help, perr;
  std::vector<const char*> argv{"addsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, help, perr) == 0 ? kOk : kInputError;
    result.out = help.str();
    result.err = perr.str();
    return result;
  }

  try {
    result.exit_code = action(c);
  } catch (const VerificationFailed& e) {
    c.emit(io::to_json(e.report));
    result.err = std::string(e.what()) + '\n';
    result.exit_code = kVerificationFailed;
  } catch (const InternalContradiction& e) {
    auto r = VerificationReport::fail("internal_contradiction");
    r.notes["detail"] = e.what();
    c.emit(io::to_json(r));
    result.err = std::string(e.what()) + '\n';
    result.exit_code = kVerificationFailed;
  } catch (const Error& e) {
    result.err = std::string(e.what()) + '\n';
    result.exit_code = exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    result.err = "out of memory\n";
    result.exit_code = kCapExceeded;
  }
  result.out = c.out.str();
  return result;
}

}  // namespace addsys::cli
