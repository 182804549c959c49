#pragma once

#include <string>
#include <vector>

#include "gronwall/omega.hpp"
#include "gronwall/sa.hpp"

namespace gw {

// Half-up rounding to tenths: the table's one-decimal log column.
int half_up_tenths(double v);

// "51.3" from 513.
std::string one_decimal(int tenths);

// Experiment rows. CSV columns: omega,factorization,sa_index,log_n,
// p_omega,ineq4 (log at one decimal, exact-style factorization). Markdown
// renders the classic table look: ellipsis factorizations and a check mark
// for ineq4. JSON carries exact factorizations and 12-decimal logs.
std::string to_csv(const std::vector<OmegaRow>& rows);
std::string to_markdown(const std::vector<OmegaRow>& rows);
std::string to_json(const std::vector<OmegaRow>& rows);

// Record lists. CSV columns: index,factorization,abundancy,log_n
// (abundancy as num/den, log at 12 decimals).
std::string to_csv(const std::vector<SARecord>& records);
std::string to_markdown(const std::vector<SARecord>& records);
std::string to_json(const std::vector<SARecord>& records);

}  // namespace gw
