namespace tcw {
}
