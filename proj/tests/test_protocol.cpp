#include <doctest.h>
TEST_SUITE("protocol") {}
