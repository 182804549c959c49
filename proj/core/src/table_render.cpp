#include <json.hpp>

#include <cmath>
#include <sstream>

#include "gronwall/render.hpp"

namespace gw {
namespace {

std::string abundancy_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

int half_up_tenths(double v) {
  return static_cast<int>(std::floor(v * 10.0 + 0.5));
}

std::string one_decimal(int tenths) {
  std::string sign = tenths < 0 ? "-" : "";
  int magnitude = std::abs(tenths);
  return sign + std::to_string(magnitude / 10) + "." +
         std::to_string(magnitude % 10);
}

std::string to_csv(const std::vector<OmegaRow>& rows) {
  std::ostringstream out;
  out << "omega,factorization,sa_index,log_n,p_omega,ineq4\n";
  for (const OmegaRow& row : rows) {
    out << row.omega << ',' << row.n_star.format(FormatStyle::Exact) << ','
        << row.sa_index << ','
        << one_decimal(half_up_tenths(row.log_n_star.midpoint_double()))
        << ',' << row.p_omega << ',' << (row.ineq4 ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string to_markdown(const std::vector<OmegaRow>& rows) {
  std::ostringstream out;
  out << "| omega | n* | SA | log n* | p | p < log n* |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const OmegaRow& row : rows) {
    out << "| " << row.omega << " | "
        << row.n_star.format(FormatStyle::Ellipsis) << " | " << row.sa_index
        << " | "
        << one_decimal(half_up_tenths(row.log_n_star.midpoint_double()))
        << " | " << row.p_omega << " | " << (row.ineq4 ? "✓" : " ")
        << " |\n";
  }
  return out.str();
}

std::string to_json(const std::vector<OmegaRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const OmegaRow& row : rows) {
    nlohmann::ordered_json item;
    item["omega"] = row.omega;
    item["factorization"] = row.n_star.format(FormatStyle::Exact);
    item["sa_index"] = row.sa_index;
    item["log_n"] = row.log_n_star.midpoint_decimal(12);
    item["p_omega"] = row.p_omega;
    item["ineq4"] = row.ineq4;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const std::vector<SARecord>& records) {
  std::ostringstream out;
  out << "index,factorization,abundancy,log_n\n";
  for (const SARecord& r : records) {
    out << r.index << ',' << r.n.format(FormatStyle::Exact) << ','
        << abundancy_text(r.abundancy) << ',' << r.log_n.midpoint_decimal(12)
        << '\n';
  }
  return out.str();
}

std::string to_markdown(const std::vector<SARecord>& records) {
  std::ostringstream out;
  out << "| index | n | sigma(n)/n | ln n |\n";
  out << "|---|---|---|---|\n";
  for (const SARecord& r : records) {
    out << "| " << r.index << " | " << r.n.format(FormatStyle::Ellipsis)
        << " | " << abundancy_text(r.abundancy) << " | "
        << r.log_n.midpoint_decimal(6) << " |\n";
  }
  return out.str();
}

std::string to_json(const std::vector<SARecord>& records) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SARecord& r : records) {
    nlohmann::ordered_json item;
    item["index"] = r.index;
    item["factorization"] = r.n.format(FormatStyle::Exact);
    item["abundancy"] = abundancy_text(r.abundancy);
    item["log_n"] = r.log_n.midpoint_decimal(12);
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

}  // namespace gw
