#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "su3/cg.hpp"

namespace su3 {

// Minimal ordered JSON writer.  Numbers carry 17 significant digits so that
// doubles round-trip exactly and reports are byte-stable run to run.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& s);
  std::string str() const { return out_.str(); }

  static std::string format_double(double v);

 private:
  void separator();
  std::ostringstream out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

std::string matrix_to_json(const MatX& m);
std::string matrix_to_json(const Mat8r& m);
std::string irrep_to_json(const IrrepLabel& label, const std::vector<IrrepState>& states);
std::string coupling_to_json(const CouplingTable& t);
std::string coupling_to_csv(const CouplingTable& t);
std::string orth_report_to_json(const OrthReport& r);

}  // namespace su3
