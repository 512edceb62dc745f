#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcgl/error.hpp"
#include "mcgl/json_io.hpp"

namespace mcgl::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerificationFailed = 2;

struct Options {
  std::string command;
  std::string field;
  std::string matrix;
  std::string witness;
  std::string out;
  std::string format = "json";
  std::size_t dim = 3;
  std::uint64_t cap = oracle::kDefaultCap;
};

namespace detail {

inline io::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read " + path);
  try {
    return io::Json::parse(in);
  } catch (const io::Json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

/// Loads --matrix and checks it against --field when both are given.
inline Mat load_matrix(const Options& o) {
  if (o.matrix.empty()) fail(Errc::UsageError, "--matrix is required");
  const Mat m = io::matrix_from_json(read_json(o.matrix));
  if (!o.field.empty()) require_same_field(FieldSpec::parse(o.field), m.field());
  return m;
}

inline std::string render(const io::Json& j, const std::string& format) {
  if (format == "text") return io::to_text(j);
  return j.dump(2) + "\n";
}

inline void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(Errc::UsageError, "cannot write " + o.out);
  f << body;
}

inline int run_oracle(const Options& o, std::ostream& out) {
  FieldSpec f;
  std::optional<Mat> only;
  if (!o.matrix.empty()) {
    only = load_matrix(o);
    f = only->field();
  } else {
    if (o.field.empty()) fail(Errc::UsageError, "oracle needs --field or --matrix");
    f = FieldSpec::parse(o.field);
  }
  const std::size_t n = only ? only->n() : o.dim;
  const oracle::ClassAtlas atlas(f, n, o.cap);
  std::vector<io::OracleRow> rows;
  if (only) {
    const auto id = atlas.id_of(*only);
    if (id == oracle::ClassAtlas::kNone) fail(Errc::Singular, "matrix is singular");
    if (atlas.is_central(id)) fail(Errc::CentralMatrix, "scalar matrices have no m(C)");
    rows.push_back(io::oracle_row(atlas, id));
  } else {
    for (std::size_t k = 0; k < atlas.class_count(); ++k) {
      const auto id = static_cast<std::int32_t>(k);
      if (!atlas.is_central(id)) rows.push_back(io::oracle_row(atlas, id));
    }
  }
  if (o.format == "csv")
    emit(o, io::oracle_csv(rows), out);
  else
    emit(o, render(io::oracle_table(rows, f, n), o.format), out);
  return kOk;
}

inline int dispatch(const Options& o, std::ostream& out) {
  if (o.command == "oracle") return run_oracle(o, out);
  if (o.format == "csv") fail(Errc::UsageError, "csv output is only available for oracle");
  if (o.command == "analyze") {
    emit(o, render(io::analyze_report(load_matrix(o)), o.format), out);
  } else if (o.command == "mvalue") {
    emit(o, render(io::to_json(classify_m(load_matrix(o))), o.format), out);
  } else if (o.command == "witness") {
    const Mat m = load_matrix(o);
    emit(o, render(io::to_json(synthesize(m)), o.format), out);
  } else if (o.command == "verify") {
    const Mat m = load_matrix(o);
    if (o.witness.empty()) fail(Errc::UsageError, "--witness is required");
    const Witness w = io::witness_from_json(read_json(o.witness), m);
    const bool ok = verify_witness(w);
    emit(o, render(io::Json{{"verified", ok}, {"length", w.factors.size()}}, o.format), out);
    return ok ? kOk : kVerificationFailed;
  } else if (o.command == "stable") {
    emit(o, render(io::stable_report(StableElement(load_matrix(o))), o.format), out);
  } else {
    fail(Errc::UsageError, "unknown command '" + o.command + "'");
  }
  return kOk;
}

}  // namespace detail

/// Runs one command; reports go to `out`, errors to `err` as JSON.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact class-product analysis for GL_n over Q and F_p", "mcgl"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool needs_matrix) {
    sub->add_option("--field", o.field, "Q or F<p>; must match the matrix file if both are given");
    auto* mat = sub->add_option("--matrix", o.matrix, "matrix JSON file");
    if (needs_matrix) mat->required();
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json, text (oracle also csv)")
        ->check(CLI::IsMember({"json", "text", "csv"}));
  };
  common(app.add_subcommand("analyze", "invariant factors, Frobenius and Jordan forms"), true);
  common(app.add_subcommand("mvalue", "m(C) verdict"), true);
  common(app.add_subcommand("witness", "verified decomposition of t_12(1)"), true);
  auto* verify = app.add_subcommand("verify", "re-check a witness file against a matrix");
  common(verify, true);
  verify->add_option("--witness", o.witness, "witness JSON file")->required();
  common(app.add_subcommand("stable", "GL_inf report"), true);
  auto* orc = app.add_subcommand("oracle", "brute-force class products over a small field");
  common(orc, false);
  orc->add_option("--dim", o.dim, "dimension when no --matrix is given")->check(CLI::Range(1, 4));
  orc->add_option("--cap", o.cap, "largest q^(n^2) to enumerate");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << io::Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();
  try {
    return detail::dispatch(o, out);
  } catch (const Error& e) {
    err << io::Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return e.code() == Errc::VerificationFailed ? kVerificationFailed : kUsage;
  }
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mcgl::cli
