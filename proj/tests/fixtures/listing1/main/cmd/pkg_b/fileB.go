// file: main/cmd/pkg_b/fileB.go
package pkg_b

// StructB struct
type StructB struct{}

// NewStructB builds a StructB value
func NewStructB() StructB {
    return StructB{}
}

// FunctionB method for StructB
func (b StructB) FunctionB() {
}
