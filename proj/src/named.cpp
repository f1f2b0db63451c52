#include "quandlekit/named.hpp"

namespace quandlekit {

Quandle two_orbit_order3()
{
  return Quandle::from_table({{0, 0, 1}, {1, 1, 0}, {2, 2, 2}});
}

std::pair<Quandle, Quandle> counterexample1()
{
  Quandle x = Quandle::from_table({
    {0, 0, 1, 1},
    {1, 1, 0, 0},
    {2, 2, 2, 2},
    {3, 3, 3, 3},
  });
  Quandle y = Quandle::from_table({
    {0, 0, 1, 0},
    {1, 1, 0, 1},
    {2, 2, 2, 2},
    {3, 3, 3, 3},
  });
  return {x, y};
}

Matrix<long long> counterexample1_matrix()
{
  return Matrix<long long>::from_rows({
    {1, 0, 0, 1},
    {0, 1, 0, 1},
    {0, 0, 1, 1},
    {0, 0, 0, 1},
  });
}

std::pair<Quandle, Quandle> counterexample2()
{
  Quandle x = Quandle::from_table({
    {0, 0, 0, 0, 1, 1, 0},
    {1, 1, 1, 1, 0, 0, 1},
    {2, 2, 2, 2, 2, 3, 2},
    {3, 3, 3, 3, 3, 2, 3},
    {4, 4, 4, 4, 4, 4, 4},
    {5, 5, 5, 5, 5, 5, 5},
    {6, 6, 6, 6, 6, 6, 6},
  });
  Quandle y = Quandle::from_table({
    {0, 0, 0, 0, 1, 0, 0},
    {1, 1, 1, 1, 0, 1, 1},
    {2, 2, 2, 2, 2, 3, 2},
    {3, 3, 3, 3, 3, 2, 3},
    {4, 4, 4, 4, 4, 4, 4},
    {5, 5, 5, 5, 5, 5, 5},
    {6, 6, 6, 6, 6, 6, 6},
  });
  return {x, y};
}

Matrix<long long> counterexample2_matrix()
{
  return Matrix<long long>::from_rows({
    {1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, -1, 1},
  });
}

std::vector<std::string> named_quandle_names()
{
  return {"cex1-x", "cex1-y", "cex2-x", "cex2-y", "two-orbit-3", "tetrahedral"};
}

std::optional<Quandle> named_quandle(const std::string &name)
{
  if (name == "cex1-x")
    return counterexample1().first;
  if (name == "cex1-y")
    return counterexample1().second;
  if (name == "cex2-x")
    return counterexample2().first;
  if (name == "cex2-y")
    return counterexample2().second;
  if (name == "two-orbit-3")
    return two_orbit_order3();
  if (name == "tetrahedral")
    return Quandle::from_table({{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}});
  return std::nullopt;
}

} // namespace quandlekit
