#include <stdio.h>
#include <string.h>
#include "apolar_kit.h"

int main(void) {
    const char *cubic = "{\"nvars\":3,\"degree\":3,\"terms\":["
        "{\"exps\":[3,0,0],\"coeff\":\"1\"},{\"exps\":[0,3,0],\"coeff\":\"1\"},"
        "{\"exps\":[0,0,3],\"coeff\":\"1\"}]}";
    ApkPolynomial *f = NULL;
    if (apk_polynomial_from_json(cubic, &f) != APK_STATUS_OK) return 1;
    bool fermat = false;
    char *report = NULL;
    if (apk_fermat_detect(f, 7, NULL, &fermat, &report) != APK_STATUS_OK || !fermat) return 2;
    if (strstr(report, "\"length\":3") == NULL) return 3;
    apk_string_free(report);
    apk_polynomial_free(f);
    if (apk_theorem_b_bound(8) != 9) return 4;
    ApkPolynomial *bad = NULL;
    if (apk_polynomial_from_json("{}", &bad) != APK_STATUS_INVALID_INPUT) return 5;
    if (apk_last_error() == NULL) return 6;
    puts("ok");
    return 0;
}
