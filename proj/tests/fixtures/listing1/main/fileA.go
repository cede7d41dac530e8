// file: main/fileA.go
package main

import (
    "ckg-prompt/main/cmd/pkg_b"
    "fmt"
)

// StructA struct
type StructA struct{}

// FunctionA method for StructA
func (a *StructA) FunctionA() pkg_b.StructB {
    x := pkg_b.NewStructB() // Instantiate StructB
    return x
}

// XFunction function
func XFunction() {
    x := pkg_b.NewStructB() // Instantiate StructB
    x.FunctionB() // Calls FunctionB
}
