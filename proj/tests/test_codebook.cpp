#include <doctest.h>
TEST_SUITE("codebook") {}
