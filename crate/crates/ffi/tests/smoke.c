#include <stdio.h>

#include "zhu_lab.h"

int main(void) {
    ZlPoly *g = NULL, *h = NULL;
    bool eq = false;
    size_t dim = 0;
    if (zl_poly_triple_sum(3, &g) != ZL_STATUS_OK || zl_poly_closed_form(3, &h) != ZL_STATUS_OK) {
        fprintf(stderr, "%s\n", zl_last_error());
        return 1;
    }
    zl_poly_equal(g, h, &eq);
    printf("equal %d\n", eq ? 1 : 0);
    zl_poly_free(g);
    zl_poly_free(h);

    if (zl_algebra_dim(ZL_FAMILY_W23, 0, &dim) != ZL_STATUS_OK) {
        fprintf(stderr, "%s\n", zl_last_error());
        return 1;
    }
    printf("dim %zu\n", dim);

    ZlStatus s = zl_poly_triple_sum(1, &g);
    printf("error %d\n", (int)s);
    return zl_last_error() == NULL;
}
