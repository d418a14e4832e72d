#include <doctest.h>
TEST_SUITE("belief") {}
