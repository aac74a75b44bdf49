pub use jumploci;
