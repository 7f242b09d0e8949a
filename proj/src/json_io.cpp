#include "su3/json_io.hpp"

#include <cstdio>

namespace su3 {

std::string JsonWriter::format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::separator() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (!first_in_scope_.back()) out_ << ",";
    first_in_scope_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ << "{";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ << "}";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ << "[";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ << "]";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separator();
  out_ << "\"" << k << "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separator();
  out_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  separator();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separator();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  separator();
  out_ << "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out_ << '\\';
    out_ << c;
  }
  out_ << "\"";
  return *this;
}

std::string matrix_to_json(const MatX& m) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(static_cast<long long>(m.rows()));
  w.key("entries").begin_array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      w.begin_array().value(m(r, c).real()).value(m(r, c).imag()).end_array();
    }
  }
  w.end_array().end_object();
  return w.str();
}

std::string matrix_to_json(const Mat8r& m) {
  MatX cm(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) cm(r, c) = m(r, c);
  }
  return matrix_to_json(cm);
}

std::string irrep_to_json(const IrrepLabel& label, const std::vector<IrrepState>& states) {
  JsonWriter w;
  w.begin_object();
  w.key("p").value(label.p);
  w.key("q").value(label.q);
  w.key("dim").value(label.dim());
  w.key("states").begin_array();
  for (const auto& s : states) {
    w.begin_object();
    w.key("t").value(s.two_t / 2.0);
    w.key("t3").value(s.weight.t3());
    w.key("y").value(s.weight.y());
    w.key("terms").begin_array();
    for (const auto& [mono, coeff] : s.state.terms()) {
      w.begin_object();
      w.key("symbols").begin_array();
      for (int id : mono) w.value(symbol_info(id).name);
      w.end_array();
      w.key("re").value(coeff.real());
      w.key("im").value(coeff.imag());
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array().end_object();
  return w.str();
}

std::string coupling_to_json(const CouplingTable& t) {
  JsonWriter w;
  w.begin_object();
  w.key("factor1").begin_array().value(t.factor1.p).value(t.factor1.q).end_array();
  w.key("factor2").begin_array().value(t.factor2.p).value(t.factor2.q).end_array();
  w.key("target").begin_array().value(t.target.p).value(t.target.q).end_array();
  w.key("multiplicity_index").value(t.mult_index);
  w.key("entries").begin_array();
  for (const auto& st : t.states) {
    for (const auto& [i, j, c] : st.coeffs) {
      const auto& s1 = t.basis1[static_cast<size_t>(i)];
      const auto& s2 = t.basis2[static_cast<size_t>(j)];
      w.begin_object();
      w.key("w1").begin_array().value(s1.two_t / 2.0).value(s1.weight.t3()).value(s1.weight.y()).end_array();
      w.key("w2").begin_array().value(s2.two_t / 2.0).value(s2.weight.t3()).value(s2.weight.y()).end_array();
      w.key("W").begin_array().value(st.two_t / 2.0).value(st.weight.t3()).value(st.weight.y()).end_array();
      w.key("coeff").value(c);
      w.end_object();
    }
  }
  w.end_array().end_object();
  return w.str();
}

std::string coupling_to_csv(const CouplingTable& t) {
  std::ostringstream out;
  out << "t1,t3_1,y1,t2,t3_2,y2,T,T3,Y,coeff\n";
  auto num = [](double v) { return JsonWriter::format_double(v); };
  for (const auto& st : t.states) {
    for (const auto& [i, j, c] : st.coeffs) {
      const auto& s1 = t.basis1[static_cast<size_t>(i)];
      const auto& s2 = t.basis2[static_cast<size_t>(j)];
      out << num(s1.two_t / 2.0) << "," << num(s1.weight.t3()) << "," << num(s1.weight.y())
          << "," << num(s2.two_t / 2.0) << "," << num(s2.weight.t3()) << ","
          << num(s2.weight.y()) << "," << num(st.two_t / 2.0) << "," << num(st.weight.t3())
          << "," << num(st.weight.y()) << "," << num(c) << "\n";
    }
  }
  return out.str();
}

std::string orth_report_to_json(const OrthReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("v0").value(r.v0);
  w.key("gram_max_offdiag").value(r.gram_max_offdiag);
  w.key("gram_max_diag_err").value(r.gram_max_diag_err);
  w.key("diagonal").begin_array();
  for (const auto& p : r.diagonal) {
    w.begin_object();
    w.key("i").value(p.i);
    w.key("value_re").value(p.value.real());
    w.key("expected").value(p.expected);
    w.key("rel_err").value(p.abs_err);
    w.end_object();
  }
  w.end_array();
  w.key("worst_offdiag_pairs").begin_array();
  for (const auto& p : r.worst_pairs) {
    w.begin_object();
    w.key("i").value(p.i);
    w.key("j").value(p.j);
    w.key("value_re").value(p.value.real());
    w.key("value_im").value(p.value.imag());
    w.key("abs_over_v0").value(p.abs_err);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace su3
