#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "samuel/errors.hpp"
#include "samuel/theorem_lab.hpp"

using namespace samuel;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kComputationError = 3 };

struct Flags {
  int n_max = 12;
  int n_cap = 40;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
  std::string field;
  std::string input;
  std::string ideal = "Q";
  std::vector<std::string> elements;
  int search = -1;
  int attempts = 20;

  std::optional<Field> field_override() const {
    if (field.empty()) return std::nullopt;
    return parse_field_flag(field);
  }
  LengthOptions length() const { return {n_cap}; }
};

// A ring file plus the ideal the command works on.
struct Loaded {
  RingSpec spec;
  LocalRingPtr ring;
  QuotientIdeal Q;
  std::vector<RingElement> gens;
};

Loaded load(const Flags& f) {
  RingSpec spec = parse_ring_file(read_text_file(f.input));
  LocalRingPtr ring = build_ring(spec, f.field_override());
  std::vector<RingElement> gens;
  if (const auto* g = spec.ideal(f.ideal)) {
    for (const auto& s : *g) gens.push_back(ring->parse_element(s));
  } else if (f.ideal == "Q") {
    for (std::size_t i = 0; i < ring->ambient()->nvars(); ++i)
      gens.push_back(ring->parse_element(ring->ambient()->names()[i]));
  } else {
    throw InvalidArgument("no ideal named '" + f.ideal + "' in " + f.input);
  }
  QuotientIdeal Q = ring->ideal(std::span<const RingElement>(gens));
  return {std::move(spec), ring, std::move(Q), std::move(gens)};
}

Json header(const std::string& command, const Loaded& in) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["ring"] = {{"field", in.ring->ambient()->field().describe()},
               {"vars", in.spec.vars},
               {"relations", in.spec.relations}};
  Json ideal = Json::array();
  for (const auto& g : in.gens) ideal.push_back(g.to_string());
  j["ideal"] = ideal;
  return j;
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? sep : "") << xs[i];
  return s.str();
}

class Output {
 public:
  explicit Output(const Flags& f) : flags_(f) {}

  std::ostream& text() { return buffer_; }
  void json(const Json& j) { buffer_ << j.dump(2) << "\n"; }

  void flush() {
    if (flags_.out.empty()) {
      std::cout << buffer_.str();
      return;
    }
    std::ofstream file(flags_.out);
    if (!file) throw InvalidArgument("cannot write '" + flags_.out + "'");
    file << buffer_.str();
  }

 private:
  const Flags& flags_;
  std::ostringstream buffer_;
};

int cmd_gb(const Flags& f, Output& out) {
  Loaded in = load(f);
  const std::vector<Polynomial>& basis = in.Q.lift().groebner_basis();
  if (f.json) {
    Json j = header("gb", in);
    Json b = Json::array();
    for (const auto& g : basis) b.push_back(g.to_string());
    j["groebner_basis"] = b;
    out.json(j);
  } else {
    out.text() << "# reduced Groebner basis of relations + " << f.ideal << " (" << basis.size() << " elements)\n";
    for (const auto& g : basis) out.text() << g.to_string() << "\n";
  }
  return kOk;
}

int cmd_hilbert(const Flags& f, Output& out) {
  Loaded in = load(f);
  HilbertTable table = hilbert_samuel_table(in.Q, f.n_max, f.length());
  if (f.json) {
    Json j = header("hilbert", in);
    j["n_max"] = f.n_max;
    j["table"] = table.values;
    out.json(j);
  } else {
    out.text() << "n\tH(n)\n";
    for (std::size_t n = 0; n < table.values.size(); ++n) out.text() << n << "\t" << table.values[n] << "\n";
  }
  return kOk;
}

int cmd_coeffs(const Flags& f, Output& out) {
  Loaded in = load(f);
  HilbertTable table = hilbert_samuel_table(in.Q, f.n_max, f.length());
  HilbertCoefficients c = fit_coefficients(table, in.ring->dimension());
  if (f.json) {
    Json j = header("coeffs", in);
    j["n_max"] = f.n_max;
    j["d"] = c.d;
    j["e"] = c.e;
    j["eta"] = c.eta;
    j["fit_window"] = {c.fit_lo, c.fit_hi};
    out.json(j);
  } else {
    out.text() << "e = [" << join(c.e) << "], eta = " << c.eta << "\n";
  }
  return kOk;
}

int cmd_series(const Flags& f, Output& out) {
  Loaded in = load(f);
  GradedSeries s = graded_series(hilbert_samuel_table(in.Q, f.n_max, f.length()));
  std::string closed = s.closed_form();
  if (f.json) {
    Json j = header("series", in);
    j["n_max"] = f.n_max;
    j["h"] = s.h_values;
    j["numerator"] = s.numerator ? Json(*s.numerator) : Json(nullptr);
    j["closed_form"] = closed.empty() ? Json(nullptr) : Json(closed);
    out.json(j);
  } else {
    out.text() << "h = [" << join(s.h_values) << "]\n";
    out.text() << "series = " << (closed.empty() ? "(not determined in window)" : closed) << "\n";
  }
  return kOk;
}

int cmd_dseq(const Flags& f, Output& out) {
  Loaded in = load(f);
  SuperficialOptions window{3, f.n_max};
  std::vector<RingElement> xs;
  if (f.search >= 0) {
    xs = superficial_sequence_search(in.Q, f.search, f.attempts, f.seed, window);
  } else if (!f.elements.empty()) {
    for (const auto& e : f.elements) xs.push_back(in.ring->parse_element(e));
  } else {
    xs = in.gens;
  }
  if (xs.empty()) throw InvalidArgument("no elements to test");

  SequenceReport regular = is_regular_sequence(xs);
  SequenceReport dseq = is_d_sequence(xs);
  std::vector<SequenceReport> superficial;
  for (const auto& x : xs) superficial.push_back(is_superficial(in.Q, x, window));

  if (f.json) {
    Json j = header("dseq", in);
    j["regular"] = regular.to_json();
    j["d_sequence"] = dseq.to_json();
    Json s = Json::array();
    for (const auto& r : superficial) s.push_back(r.to_json());
    j["superficial"] = s;
    out.json(j);
  } else {
    auto line = [&](const std::string& label, const SequenceReport& r) {
      out.text() << label << ": " << (r.verdict ? "yes" : "no");
      if (const ConditionCheck* c = r.first_failure()) out.text() << " (" << c->name << ")";
      out.text() << "\n";
    };
    out.text() << "elements: " << join(regular.elements) << "\n";
    line("regular sequence", regular);
    line("d-sequence", dseq);
    for (std::size_t i = 0; i < xs.size(); ++i) line("superficial " + xs[i].to_string(), superficial[i]);
  }
  return kOk;
}

LabOptions lab_options(const Flags& f) {
  LabOptions o;
  o.n_max = f.n_max;
  o.vv_n_max = f.n_max;
  o.superficial.n_max = f.n_max;
  o.length = f.length();
  return o;
}

void print_report(std::ostream& os, const TheoremReport& r) {
  os << r.name << "  d = " << r.d;
  if (r.error_kind) {
    os << "  ERROR " << *r.error_kind << ": " << r.error_message.value_or("") << "\n";
    return;
  }
  os << "  e = [" << join(r.coefficients->e) << "]  eta = " << r.coefficients->eta << "\n";
  for (const auto& c : r.claims) {
    os << "  " << to_string(c.verdict) << "  " << c.id << " [" << to_string(c.status) << "]";
    if (!c.unmet.empty()) os << " unmet: " << join(c.unmet, "; ");
    os << "\n";
  }
}

int cmd_check(const Flags& f, Output& out) {
  RingSpec spec = parse_ring_file(read_text_file(f.input));
  if (spec.name.empty()) spec.name = f.input;
  CorpusInstance inst = CorpusInstance::from_spec(spec, f.field_override());
  TheoremReport r = run_instance(inst, lab_options(f));
  if (f.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["report"] = r.to_json();
    out.json(j);
  } else {
    print_report(out.text(), r);
  }
  return r.count(Verdict::Failure) ? kFailure : kOk;
}

int cmd_corpus(const Flags& f, Output& out) {
  std::string text = f.input == "builtin" ? std::string(builtin_corpus()) : read_text_file(f.input);
  CorpusReport r = run_corpus(text, lab_options(f), f.field_override());
  if (f.json) {
    out.json(r.to_json());
  } else {
    for (const auto& inst : r.instances) print_report(out.text(), inst);
    out.text() << "verified " << r.count(Verdict::Verified) << ", failure " << r.count(Verdict::Failure)
               << ", skipped " << r.count(Verdict::Skipped) << ", vacuous " << r.count(Verdict::Vacuous)
               << ", errors " << r.errors() << "\n";
  }
  if (r.count(Verdict::Failure)) return kFailure;
  return r.errors() ? kComputationError : kOk;
}

bool is_input_error(const Error& e) {
  const std::string& n = e.name();
  return n == "ParseError" || n == "InvalidArgument" || n == "ArityMismatch" || n == "FieldMismatch";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel coefficients of parameter ideals in local rings"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub, const std::string& input_help) {
    sub->add_option("input", f.input, input_help)->required();
    sub->add_option("--nmax", f.n_max, "largest power of Q computed")->capture_default_str()->check(CLI::Range(1, 64));
    sub->add_option("--Ncap", f.n_cap, "largest truncation degree for local lengths")
        ->capture_default_str()
        ->check(CLI::Range(1, 400));
    sub->add_option("--seed", f.seed, "seed for the superficial sequence search")->capture_default_str();
    sub->add_flag("--json", f.json, "JSON output");
    sub->add_option("--out", f.out, "write output to this path");
    sub->add_option("--field", f.field, "coefficient field override: q or fp:P");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Flags&, Output&)>> commands;
  auto ring_cmd = [&](const char* name, const char* help, int (*fn)(const Flags&, Output&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, "ring file");
    sub->add_option("--ideal", f.ideal, "name of the ideal in the ring file")->capture_default_str();
    commands.emplace_back(sub, fn);
    return sub;
  };
  ring_cmd("gb", "reduced Groebner basis of relations + ideal", cmd_gb);
  ring_cmd("hilbert", "Hilbert-Samuel table H(n) = length(R/Q^n)", cmd_hilbert);
  ring_cmd("coeffs", "Hilbert coefficients e_0..e_d and the postulation number", cmd_coeffs);
  ring_cmd("series", "h-vector and closed form of the associated graded ring", cmd_series);
  CLI::App* dseq = ring_cmd("dseq", "regular, d-sequence and superficial checks", cmd_dseq);
  dseq->add_option("--elements", f.elements, "elements to test (default: generators of the ideal)")->delimiter(',');
  dseq->add_option("--search", f.search, "search for this many superficial elements instead");
  dseq->add_option("--attempts", f.attempts, "attempts per element in the search")->capture_default_str();
  ring_cmd("check", "run every theorem check on one ring file", cmd_check);
  CLI::App* corpus = app.add_subcommand("corpus", "run a corpus file, or the built-in corpus with 'builtin'");
  common(corpus, "corpus file or 'builtin'");
  commands.emplace_back(corpus, cmd_corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    f.field_override();  // validate before computing
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      Output out(f);
      int code = fn(f, out);
      out.flush();
      return code;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return is_input_error(e) ? kInputError : kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kInputError;
}
