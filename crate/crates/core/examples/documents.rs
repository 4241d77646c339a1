//! Reading and writing structure documents, and how malformed input is
//! reported.

use opgroupoid::corpus::zn_ring;
use opgroupoid::io::{parse, serialize, Document, Structure};

fn main() {
    let doc = Document::new(Structure::Algebra(zn_ring(3))).named("Z/3");
    let text = serialize(&doc);
    print!("{text}");
    println!("round trip: {}", parse(&text).as_ref() == Ok(&doc));

    for bad in [
        r#"{"kind":"algebra","version":1,"data":{"size":2,"zero":0,"add":[[0,1],[1]],"neg":[0,1]}}"#,
        "{\"kind\": \"groupoid\",\n \"data\": [}",
        r#"{"kind":"monoid","version":1,"data":{}}"#,
    ] {
        println!("{}", parse(bad).unwrap_err());
    }
}
