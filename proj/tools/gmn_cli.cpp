// Command-line front end for the G = <a, b; [a^m, b^n] = 1> calculator.
//
// Exit codes: 0 = success / true verdict, 1 = false verdict,
// 2 = usage, parse or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "gmn/amalgam.hpp"
#include "gmn/aut_words.hpp"
#include "gmn/automorphism.hpp"
#include "gmn/generation.hpp"
#include "gmn/quotients.hpp"
#include "gmn/words.hpp"

using json = nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

gmn::QuotientKind parse_quotient(const std::string& s) {
  if (s == "M" || s == "m") return gmn::QuotientKind::M;
  if (s == "N" || s == "n") return gmn::QuotientKind::N;
  throw gmn::DomainError("quotient must be M or N");
}

struct Output {
  bool as_json;
  json obj;

  void set(const std::string& key, const json& value) { obj[key] = value; }

  void line(const std::string& text) {
    if (!as_json) std::cout << text << "\n";
  }

  int finish(int code) {
    if (as_json) {
      obj["exit"] = code;
      std::cout << obj.dump() << "\n";
    }
    return code;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"exact arithmetic in the one-relator groups <a, b; [a^m, b^n] = 1>"};
  app.require_subcommand(1);

  std::int64_t m = 0, n = 0;
  bool as_json = false;
  app.add_option("--m", m, "exponent of a in the relator (>= 2)")->required();
  app.add_option("--n", n, "exponent of b in the relator (>= 2)")->required();
  app.add_flag("--json", as_json, "machine-readable output");

  std::string w1, w2;

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("word", w1)->required();
  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("word1", w1)->required();
  eq->add_option("word2", w2)->required();
  auto* len = app.add_subcommand("len", "length of the reduced form");
  len->add_option("word", w1)->required();
  auto* cyc = app.add_subcommand("cyc", "cyclic decomposition g = u v u^-1");
  cyc->add_option("word", w1)->required();
  auto* hint = app.add_subcommand("hint", "classification of g^-1 H g meet H");
  hint->add_option("word", w1)->required();
  auto* power = app.add_subcommand("power", "express v as a power of the subgroup generator");
  power->add_option("u", w1)->required();
  power->add_option("v", w2)->required();
  auto* isauto = app.add_subcommand("is-auto", "decide whether a -> u, b -> v is an automorphism");
  isauto->add_option("u", w1)->required();
  isauto->add_option("v", w2)->required();
  auto* autcanon = app.add_subcommand("aut-canon", "canonical form of an automorphism word");
  autcanon->add_option("autword", w1)->required();
  auto* auteq = app.add_subcommand("aut-eq", "decide equality of two automorphism words");
  auteq->add_option("autword1", w1)->required();
  auteq->add_option("autword2", w2)->required();
  auto* isnormal = app.add_subcommand("is-normal", "decide whether the automorphism is normal");
  isnormal->add_option("u", w1)->required();
  isnormal->add_option("v", w2)->required();
  std::string quotient_name;
  auto* qnf = app.add_subcommand("q-nf", "normal form in the quotient G/M or G/N");
  qnf->add_option("quotient", quotient_name, "M or N")->required();
  qnf->add_option("word", w1)->required();
  auto* qconj = app.add_subcommand("q-conj", "conjugacy in the quotient G/M or G/N");
  qconj->add_option("quotient", quotient_name, "M or N")->required();
  qconj->add_option("word1", w1)->required();
  qconj->add_option("word2", w2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  Output out{as_json, json::object()};
  out.set("m", m);
  out.set("n", n);

  try {
    gmn::Gmn G({m, n});

    if (nf->parsed()) {
      out.set("command", "nf");
      std::string s = G.to_string(G.embed(gmn::parse_word(w1)));
      out.set("normal_form", s);
      out.line(s);
      return out.finish(kTrue);
    }
    if (eq->parsed()) {
      out.set("command", "eq");
      bool equal = G.embed(gmn::parse_word(w1)) == G.embed(gmn::parse_word(w2));
      out.set("equal", equal);
      out.line(equal ? "equal" : "not equal");
      return out.finish(equal ? kTrue : kFalse);
    }
    if (len->parsed()) {
      out.set("command", "len");
      std::int64_t l = G.length(G.embed(gmn::parse_word(w1)));
      out.set("length", l);
      out.line(std::to_string(l));
      return out.finish(kTrue);
    }
    if (cyc->parsed()) {
      out.set("command", "cyc");
      gmn::CyclicDecomposition cd = G.cyclic_decompose(G.embed(gmn::parse_word(w1)));
      out.set("u", G.to_string(cd.conjugator));
      out.set("v", G.to_string(cd.core));
      out.line("u = " + G.to_string(cd.conjugator));
      out.line("v = " + G.to_string(cd.core));
      return out.finish(kTrue);
    }
    if (hint->parsed()) {
      out.set("command", "hint");
      std::string cls = gmn::to_string(G.h_intersection(G.embed(gmn::parse_word(w1))));
      out.set("classification", cls);
      out.line(cls);
      return out.finish(kTrue);
    }
    if (power->parsed()) {
      out.set("command", "power");
      gmn::PowerExpression pe =
          G.express_as_power(G.embed(gmn::parse_word(w1)), G.embed(gmn::parse_word(w2)));
      out.set("generator", G.to_string(pe.generator));
      out.set("k", pe.exponent);
      out.line("generator = " + G.to_string(pe.generator));
      out.line("k = " + std::to_string(pe.exponent));
      return out.finish(kTrue);
    }
    if (isauto->parsed()) {
      out.set("command", "is-auto");
      gmn::AutVerdict v = gmn::is_automorphism(G, gmn::parse_word(w1), gmn::parse_word(w2));
      out.set("accepted", v.accepted());
      if (v.accepted()) {
        gmn::AutCanonical c{v.decomposition->kappa, v.decomposition->w};
        out.set("kappa", gmn::to_string(v.decomposition->kappa));
        out.set("inner", G.to_string(v.decomposition->w));
        out.line(gmn::to_string(G, c));
        return out.finish(kTrue);
      }
      out.set("reason", gmn::to_string(*v.reason));
      out.set("detail", v.detail);
      out.line("rejected: " + gmn::to_string(*v.reason) + " (" + v.detail + ")");
      return out.finish(kFalse);
    }
    if (autcanon->parsed()) {
      out.set("command", "aut-canon");
      gmn::AutCanonical c = gmn::canonicalize(G, gmn::parse_aut_word(w1));
      out.set("kappa", gmn::to_string(c.kappa));
      out.set("inner", G.to_string(c.inner));
      out.line(gmn::to_string(G, c));
      return out.finish(kTrue);
    }
    if (auteq->parsed()) {
      out.set("command", "aut-eq");
      bool equal = gmn::aut_words_equal(G, gmn::parse_aut_word(w1), gmn::parse_aut_word(w2));
      out.set("equal", equal);
      out.line(equal ? "equal" : "not equal");
      return out.finish(equal ? kTrue : kFalse);
    }
    if (isnormal->parsed()) {
      out.set("command", "is-normal");
      gmn::AutMap phi = gmn::make_endomorphism(G, gmn::parse_word(w1), gmn::parse_word(w2));
      gmn::NormalityVerdict v = gmn::is_normal_automorphism(G, phi);
      out.set("normal", v.normal);
      out.set("certificate", gmn::describe(G, v));
      if (const auto* wit = std::get_if<gmn::WitnessCertificate>(&v.certificate)) {
        out.set("quotient", gmn::to_string(wit->quotient));
        out.set("witness", wit->witness.generator_x ? "x" : "y");
        out.set("witness_image", gmn::to_string(wit->witness.image));
      } else if (const auto* obs = std::get_if<gmn::OrderObstructionCertificate>(&v.certificate)) {
        out.set("quotient", gmn::to_string(obs->quotient));
        out.set("killed_image", gmn::to_string(obs->image_of_killed));
      } else {
        out.set("conjugator", G.to_string(std::get<gmn::InnerCertificate>(v.certificate).w));
      }
      out.line(gmn::describe(G, v));
      return out.finish(v.normal ? kTrue : kFalse);
    }
    if (qnf->parsed()) {
      out.set("command", "q-nf");
      gmn::QuotientKind q = parse_quotient(quotient_name);
      std::string s = gmn::to_string(gmn::project(G, G.embed(gmn::parse_word(w1)), q));
      out.set("quotient", gmn::to_string(q));
      out.set("normal_form", s);
      out.line(s);
      return out.finish(kTrue);
    }
    if (qconj->parsed()) {
      out.set("command", "q-conj");
      gmn::QuotientKind q = parse_quotient(quotient_name);
      gmn::FPSpec spec = gmn::quotient_spec(G, q);
      bool conj = gmn::fp_conjugate(spec, gmn::project(G, G.embed(gmn::parse_word(w1)), q),
                                    gmn::project(G, G.embed(gmn::parse_word(w2)), q));
      out.set("quotient", gmn::to_string(q));
      out.set("conjugate", conj);
      out.line(conj ? "conjugate" : "not conjugate");
      return out.finish(conj ? kTrue : kFalse);
    }
    out.line("no subcommand given");
    return out.finish(kError);
  } catch (const gmn::ParseError& e) {
    out.set("error", e.what());
    if (!as_json) std::cerr << "parse error: " << e.what() << "\n";
    return out.finish(kError);
  } catch (const gmn::OverflowError& e) {
    out.set("error", e.what());
    if (!as_json) std::cerr << "overflow: " << e.what() << "\n";
    return out.finish(kError);
  } catch (const gmn::DomainError& e) {
    out.set("error", e.what());
    if (!as_json) std::cerr << "error: " << e.what() << "\n";
    return out.finish(kError);
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
