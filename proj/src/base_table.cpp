#include "gpath/constructor.hpp"

namespace gpath {

const std::vector<BaseEntry>& base_table() {
  static const std::vector<BaseEntry> table = {
    {1, 1, GoodVariant::Type1, {1}},
    {1, 1, GoodVariant::Type2, {1}},
    {2, 1, GoodVariant::Type2, {1, 2}},
    {2, 2, GoodVariant::Type1, {2, 1}},
    {3, 1, GoodVariant::Type2, {1, 3, 2}},
    {3, 2, GoodVariant::Type1, {2, 1, 3}},
    {3, 2, GoodVariant::Type2, {2, 3, 1}},
    {3, 3, GoodVariant::Type1, {3, 1, 2}},
    {4, 1, GoodVariant::Type2, {1, 4, 2, 3}},
    {4, 2, GoodVariant::Type2, {2, 3, 1, 4}},
    {4, 3, GoodVariant::Type1, {3, 2, 4, 1}},
    {4, 4, GoodVariant::Type1, {4, 1, 3, 2}},
    {5, 1, GoodVariant::Type2, {1, 5, 2, 4, 3}},
    {5, 3, GoodVariant::Type1, {3, 2, 4, 1, 5}},
    {5, 3, GoodVariant::Type2, {3, 4, 2, 5, 1}},
    {5, 5, GoodVariant::Type1, {5, 1, 4, 2, 3}},
    {6, 1, GoodVariant::Type2, {1, 6, 2, 5, 3, 4}},
    {6, 2, GoodVariant::Type2, {2, 4, 3, 6, 1, 5}},
    {6, 3, GoodVariant::Type2, {3, 4, 2, 5, 1, 6}},
    {6, 4, GoodVariant::Type1, {4, 3, 5, 2, 6, 1}},
    {6, 5, GoodVariant::Type1, {5, 1, 6, 3, 4, 2}},
    {6, 6, GoodVariant::Type1, {6, 1, 5, 2, 4, 3}},
  };
  return table;
}

}  // namespace gpath
