#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "germsum/scalar.hpp"

int main(int argc, char** argv) {
  germsum::PrecisionGuard guard(germsum::kDefaultPrecisionBits);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
