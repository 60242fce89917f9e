use std::sync::Once;

use pyo3::prelude::*;

use intervalcol::intervalcol;

fn python() {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        pyo3::append_to_inittab!(intervalcol);
        Python::initialize();
    });
}

fn run(code: &std::ffi::CStr) {
    python();
    Python::attach(|py| {
        if let Err(e) = py.run(code, None, None) {
            e.display(py);
            panic!("python check failed");
        }
    });
}

#[test]
fn construct_and_verify_from_python() {
    run(c"
import intervalcol as ic
g = ic.Graph.complete(8)
c = ic.construct(4)
assert c.span == 10 and len(c) == 28
assert ic.verify_interval(g, c).verdict
assert ic.palette(ic.Graph.complete(4), ic.construct(2), 3) == [2, 3, 4]
assert ic.classify_edge(2, 3, 4) == 8
assert ic.emit_coloring(ic.Graph.complete(2), ic.construct(1)) == 'c 2 1\\ne 1 2 1\\n'
");
}

#[test]
fn search_and_bounds_from_python() {
    run(c"
import intervalcol as ic
k4 = ic.Graph.complete(4)
assert ic.compute_w(k4) == (4, True, ic.compute_w(k4)[2])
status, nodes, witness = ic.find_interval_coloring(k4, 5, budget=0)
assert status == 'exhausted' and witness is None
assert ic.bounds_for_k2n(2)['best_lower'] == ic.bounds_for_k2n(2)['best_upper'] == 4
try:
    ic.construct(0)
except ValueError:
    pass
else:
    raise AssertionError('n = 0 accepted')
try:
    ic.find_interval_coloring(k4, 4, order='random')
except ValueError:
    pass
else:
    raise AssertionError('bad order accepted')
");
}
